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

#ifndef MCKAY_HJ_HPP_
#define MCKAY_HJ_HPP_

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "mckay/check.hpp"

namespace mckay {

using Int = std::int64_t;

/// Canonical representative of `a` modulo `n` in [0, n-1].
constexpr Int mod(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

constexpr Int mod_wide(__int128 a, Int n) {
  auto r = static_cast<Int>(a % n);
  return r < 0 ? r + n : r;
}

/// The cyclic group of type 1/n(1, q): order n, acting by diag(z, z^q).
struct SingularityType {
  Int n = 0;
  Int q = 0;

  friend bool operator==(const SingularityType&, const SingularityType&) = default;
};

/// Throws InvalidInput unless 0 < q < n and gcd(n, q) = 1. A common factor
/// means the group contains a pseudo-reflection.
inline void require_small(const SingularityType& s) {
  if (s.n < 2) {
    throw InvalidInput("n must be at least 2 (got n=" + std::to_string(s.n) + ")");
  }
  if (s.q <= 0 || s.q >= s.n) {
    throw InvalidInput("q must satisfy 0 < q < n (got n=" + std::to_string(s.n) +
                       ", q=" + std::to_string(s.q) + ")");
  }
  if (std::gcd(s.n, s.q) != 1) {
    throw InvalidInput("gcd(n,q) must be 1 (got n=" + std::to_string(s.n) +
                       ", q=" + std::to_string(s.q) + ")");
  }
}

/// Returns the q' in [1, n-1] with q * q' = 1 (mod n).
inline Int inverse_mod(Int q, Int n) {
  if (n < 2) throw InvalidInput("modulus must be at least 2");
  Int a = mod(q, n);
  if (std::gcd(a, n) != 1) {
    throw InvalidInput("inverse_mod: " + std::to_string(q) + " is not a unit mod " +
                       std::to_string(n));
  }
  // Extended Euclid on (a, n), tracking only the coefficient of a.
  Int old_r = a, r = n;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  return mod(old_s, n);
}

/// Hirzebruch-Jung data of 1/n(1, q).
///
/// `i` and `j` are indexed 0..r+1 exactly as the subscripts they carry.
/// `b` holds b_1..b_r; use b_at(t) for 1-based access.
struct HjExpansion {
  SingularityType base;
  Int q_prime = 0;
  Int r = 0;
  std::vector<Int> b;
  std::vector<Int> i;
  std::vector<Int> j;

  [[nodiscard]] Int n() const { return base.n; }
  [[nodiscard]] Int q() const { return base.q; }
  [[nodiscard]] Int b_at(Int t) const { return b.at(static_cast<std::size_t>(t - 1)); }
  [[nodiscard]] Int i_at(Int t) const { return i.at(static_cast<std::size_t>(t)); }
  [[nodiscard]] Int j_at(Int t) const { return j.at(static_cast<std::size_t>(t)); }

  friend bool operator==(const HjExpansion&, const HjExpansion&) = default;
};

/// Runs i_t = b_{t+1} i_{t+1} - i_{t+2} with b_{t+1} = ceil(i_t / i_{t+1})
/// until the remainder reaches zero, then builds the dual sequence.
inline HjExpansion expand(const SingularityType& s) {
  require_small(s);
  HjExpansion e;
  e.base = s;
  e.i = {s.n, s.q};
  while (e.i.back() != 0) {
    const Int cur = e.i[e.i.size() - 2];
    const Int next = e.i.back();
    const Int bt = (cur + next - 1) / next;
    e.b.push_back(bt);
    e.i.push_back(bt * next - cur);
  }
  e.r = static_cast<Int>(e.b.size());

  e.j.assign(static_cast<std::size_t>(e.r + 2), 0);
  e.j[1] = 1;
  for (Int t = 2; t <= e.r + 1; ++t) {
    e.j[t] = e.j[t - 1] * e.b_at(t - 1) - e.j[t - 2];
  }
  e.q_prime = e.j[e.r];
  return e;
}

inline HjExpansion expand(Int n, Int q) { return expand(SingularityType{n, q}); }

namespace detail {

inline std::string at_t(Int t) { return "t=" + std::to_string(t); }

// Evaluates b_1 - 1/(b_2 - 1/(... - 1/b_r)) as a reduced fraction and
// compares with n/q. Gives up (returns false) on a zero denominator or
// when the intermediate values leave the 62-bit range.
inline bool reconstructs(const std::vector<Int>& b, Int n, Int q, std::string& why) {
  if (b.empty()) {
    why = "empty b";
    return false;
  }
  constexpr __int128 kLimit = static_cast<__int128>(1) << 62;
  __int128 num = b.back();
  __int128 den = 1;
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) {
    if (num == 0) {
      why = "zero denominator while folding";
      return false;
    }
    // b - den/num = (b*num - den)/num
    __int128 next_num = static_cast<__int128>(*it) * num - den;
    den = num;
    num = next_num;
    if (num > kLimit || num < -kLimit || den > kLimit || den < -kLimit) {
      why = "overflow while folding";
      return false;
    }
    const Int g = std::gcd(static_cast<Int>(num), static_cast<Int>(den));
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const bool ok = num * q == den * static_cast<__int128>(n);
  if (!ok) {
    why = "continued fraction = " + std::to_string(static_cast<Int>(num)) + "/" +
          std::to_string(static_cast<Int>(den));
  }
  return ok;
}

}  // namespace detail

/// Checks every invariant of an HjExpansion. Accepts arbitrary candidate
/// data; when the sequence lengths are inconsistent only the shape check is
/// reported.
inline Report validate(const HjExpansion& e) {
  using detail::at_t;
  Report report;
  const Int n = e.n();
  const Int q = e.q();
  const Int r = e.r;

  CheckBuilder shape("shape");
  shape.expect(n >= 2, "n=" + std::to_string(n) + " < 2");
  shape.expect(q > 0 && q < n, "q=" + std::to_string(q) + " outside (0, n)");
  shape.expect(r >= 1, "r=" + std::to_string(r) + " < 1");
  shape.expect(static_cast<Int>(e.b.size()) == r, "len(b) != r");
  shape.expect(static_cast<Int>(e.i.size()) == r + 2, "len(i) != r+2");
  shape.expect(static_cast<Int>(e.j.size()) == r + 2, "len(j) != r+2");
  report.add(shape.build());
  if (!shape.ok()) return report;

  const auto& i = e.i;
  const auto& j = e.j;
  auto wide = [](Int a, Int b) { return static_cast<__int128>(a) * b; };

  report.add("coprime", std::gcd(n, q) == 1,
             std::gcd(n, q) == 1 ? "" : "gcd=" + std::to_string(std::gcd(n, q)));

  CheckBuilder i_end("i-endpoints");
  i_end.expect(i[0] == n, "i_0 != n");
  i_end.expect(i[1] == q, "i_1 != q");
  i_end.expect(i[r] == 1, "i_r != 1");
  i_end.expect(i[r + 1] == 0, "i_{r+1} != 0");
  report.add(i_end.build());

  CheckBuilder i_dec("i-decreasing");
  for (Int t = 0; t <= r; ++t) i_dec.expect(i[t] > i[t + 1], at_t(t));
  report.add(i_dec.build());

  CheckBuilder i_rec("i-recurrence");
  for (Int t = 0; t + 1 <= r; ++t) {
    const bool eq = wide(e.b_at(t + 1), i[t + 1]) - i[t + 2] == i[t];
    const bool bounded = 0 <= i[t + 2] && i[t + 2] < i[t + 1];
    i_rec.expect(eq && bounded, at_t(t));
  }
  report.add(i_rec.build());

  CheckBuilder b_min("b-minimal");
  for (Int t = 1; t <= r; ++t) b_min.expect(e.b_at(t) >= 2, at_t(t));
  report.add(b_min.build());

  CheckBuilder j_end("j-endpoints");
  j_end.expect(j[0] == 0, "j_0 != 0");
  j_end.expect(j[1] == 1, "j_1 != 1");
  report.add(j_end.build());

  CheckBuilder j_rec("j-recurrence");
  for (Int t = 2; t <= r + 1; ++t) {
    j_rec.expect(wide(j[t - 1], e.b_at(t - 1)) - j[t - 2] == j[t], at_t(t));
  }
  report.add(j_rec.build());

  CheckBuilder j_inc("j-increasing");
  for (Int t = 1; t <= r; ++t) j_inc.expect(j[t] < j[t + 1], at_t(t));
  report.add(j_inc.build());

  CheckBuilder j_dual("j-duality");
  j_dual.expect(j[r] == e.q_prime, "j_r != q'");
  j_dual.expect(j[r + 1] == n, "j_{r+1} != n");
  report.add(j_dual.build());

  CheckBuilder inv("q-prime-inverse");
  inv.expect(e.q_prime >= 1 && e.q_prime <= n - 1, "q' outside [1, n-1]");
  inv.expect(mod_wide(wide(q, e.q_prime), n) == 1 % n, "q*q' != 1 mod n");
  report.add(inv.build());

  CheckBuilder det("determinant");
  for (Int t = 0; t <= r; ++t) {
    det.expect(wide(i[t], j[t + 1]) - wide(i[t + 1], j[t]) == n, at_t(t));
  }
  report.add(det.build());

  CheckBuilder cong("dual-congruence");
  for (Int t = 0; t <= r + 1; ++t) {
    cong.expect(mod_wide(wide(q, j[t]), n) == mod(i[t], n), at_t(t));
  }
  report.add(cong.build());

  std::string why;
  const bool rec = detail::reconstructs(e.b, n, q, why);
  report.add("reconstruction", rec, why);
  return report;
}

}  // namespace mckay

#endif  // MCKAY_HJ_HPP_
