// Copyright 2026 The mckay-cyclic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#ifndef MCKAY_TESTS_ORACLES_HPP_
#define MCKAY_TESTS_ORACLES_HPP_

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "mckay/hj.hpp"

namespace mckay::testing {

struct Fraction {
  Int num = 0;
  Int den = 1;
};

inline Fraction reduce(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num, den);
  return g ? Fraction{num / g, den / g} : Fraction{num, den};
}

/// b_1 - 1/(b_2 - 1/(... - 1/b_r)) evaluated front to back with convergents.
/// P_k = b_k P_{k-1} - P_{k-2}, Q_k = b_k Q_{k-1} - Q_{k-2}.
inline Fraction fold_continued_fraction(const std::vector<Int>& b) {
  Int p_prev = 1, p = b.at(0);
  Int q_prev = 0, q = 1;
  for (std::size_t k = 1; k < b.size(); ++k) {
    const Int np = b[k] * p - p_prev;
    const Int nq = b[k] * q - q_prev;
    p_prev = p;
    p = np;
    q_prev = q;
    q = nq;
  }
  return reduce(p, q);
}

inline Int brute_inverse(Int q, Int n) {
  for (Int x = 1; x < n; ++x) {
    if ((q * x) % n == 1) return x;
  }
  return -1;
}

/// For every d in [0, n-1], all digit vectors with sum d_t i_t = d and the
/// tail bound, found by scanning the box 0 <= d_t <= n / i_t once.
inline std::vector<std::vector<std::vector<Int>>> brute_digit_solutions(const std::vector<Int>& i,
                                                                        Int r) {
  const Int n = i[0];
  std::vector<std::vector<std::vector<Int>>> out(static_cast<std::size_t>(n));
  std::vector<Int> cur(static_cast<std::size_t>(r), 0);
  auto at = [&](Int t) { return i[static_cast<std::size_t>(t)]; };
  auto tail_ok = [&]() {
    for (Int t0 = 0; t0 <= r; ++t0) {
      Int s = 0;
      for (Int t = t0 + 1; t <= r; ++t) s += cur[static_cast<std::size_t>(t - 1)] * at(t);
      if (!(0 <= s && s < at(t0))) return false;
    }
    return true;
  };
  while (true) {
    Int s = 0;
    for (Int t = 1; t <= r; ++t) s += cur[static_cast<std::size_t>(t - 1)] * at(t);
    if (s < n && tail_ok()) out[static_cast<std::size_t>(s)].push_back(cur);
    Int t = 0;
    while (t < r) {
      auto& c = cur[static_cast<std::size_t>(t)];
      if (c < n / at(t + 1)) {
        ++c;
        break;
      }
      c = 0;
      ++t;
    }
    if (t == r) break;
  }
  return out;
}

/// Both digit conditions checked literally over every pair (s, t).
inline bool literal_valid(const std::vector<Int>& b, const std::vector<Int>& digits) {
  const auto r = b.size();
  for (std::size_t t = 0; t < r; ++t) {
    if (digits[t] < 0 || digits[t] > b[t] - 1) return false;
  }
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t t = s + 1; t < r; ++t) {
      if (digits[s] != b[s] - 1 || digits[t] != b[t] - 1) continue;
      bool found = false;
      for (std::size_t l = s + 1; l < t; ++l) found = found || digits[l] <= b[l] - 3;
      if (!found) return false;
    }
  }
  return true;
}

/// Every sequence in the box prod [0, b_t - 1] passing literal_valid.
inline std::vector<std::vector<Int>> brute_valid_digits(const std::vector<Int>& b) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(b.size(), 0);
  while (true) {
    if (literal_valid(b, cur)) out.push_back(cur);
    std::size_t t = 0;
    while (t < b.size()) {
      if (cur[t] < b[t] - 1) {
        ++cur[t];
        break;
      }
      cur[t] = 0;
      ++t;
    }
    if (t == b.size()) break;
  }
  return out;
}

/// Leibniz determinant, for tiny matrices only.
inline Int leibniz_det(const std::vector<std::vector<Int>>& m) {
  const auto n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    Int sign = 1;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (perm[a] > perm[b]) sign = -sign;
      }
    }
    Int prod = sign;
    for (std::size_t a = 0; a < n; ++a) prod *= m[a][perm[a]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank over F_p by plain Gaussian elimination with modular inverses. For
/// small integer matrices and a large prime this equals the rational rank.
inline std::size_t rank_mod_p(std::vector<std::vector<Int>> m, Int p = 1'000'000'007) {
  auto inv = [p](Int a) {
    Int result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (auto& row : m) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const Int iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Int factor = m[r][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Coprime pairs (n, q) with lo <= n <= hi, q ascending within n ascending.
inline std::vector<std::pair<Int, Int>> coprime_pairs(Int lo, Int hi) {
  std::vector<std::pair<Int, Int>> out;
  for (Int n = lo; n <= hi; ++n) {
    for (Int q = 1; q < n; ++q) {
      if (std::gcd(n, q) == 1) out.emplace_back(n, q);
    }
  }
  return out;
}

}  // namespace mckay::testing

#endif  // MCKAY_TESTS_ORACLES_HPP_
