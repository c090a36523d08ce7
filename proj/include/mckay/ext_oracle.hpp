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

#ifndef MCKAY_EXT_ORACLE_HPP_
#define MCKAY_EXT_ORACLE_HPP_

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mckay/bareiss.hpp"
#include "mckay/check.hpp"
#include "mckay/collection.hpp"
#include "mckay/ext.hpp"
#include "mckay/hj.hpp"
#include "mckay/reps.hpp"

// Brute-force Ext between collection objects: apply Hom(-, E_d') to the
// explicit free resolution of E_d, restrict every term to its G-invariant
// part (an explicit monomial basis) and take cohomology by exact elimination.
// Nothing here uses the alpha/beta splitting in ext.hpp.

namespace mckay {

/// c * x^a * y^b in C[x, y].
struct Monomial {
  Int coeff = 0;
  Int x_pow = 0;
  Int y_pow = 0;
};

/// A map between free modules: entry(target_summand, source_summand).
struct FreeMap {
  std::size_t target_rank = 0;
  std::size_t source_rank = 0;
  std::vector<Monomial> entries;  // row-major

  [[nodiscard]] const Monomial& entry(std::size_t tgt, std::size_t src) const {
    return entries[tgt * source_rank + src];
  }
};

/// 0 -> F2 -> F1 -> F0 -> E_d -> 0 with F_k a sum of R (x) rho_a.
///
///   F0 = R(a0)            a0 = d + q - j_t q
///   F1 = R(a1) + R(a2)    a1 = 1 + d + q - j_t q,  a2 = d + q
///   F2 = R(a3)            a3 = 1 + d + q
///
/// d1 = (x, y^{j_t}) : F1 -> F0 and d2 = (y^{j_t}, -x)^T : F2 -> F1.
struct ResolutionData {
  Int n = 0;
  Int q = 0;
  Int m = 0;  // j_t
  std::array<std::vector<CharIndex>, 3> twists;
  FreeMap d1;
  FreeMap d2;
};

inline ResolutionData resolution_of(const HjExpansion& e, CharIndex d) {
  const Int n = e.n();
  const Int q = e.q();
  const Int jt = e.j_at(level_of(e, d));
  const Int dv = d.value();
  ResolutionData res;
  res.n = n;
  res.q = q;
  res.m = jt;
  res.twists[0] = {CharIndex::of(dv + q - jt * q, n)};
  res.twists[1] = {CharIndex::of(1 + dv + q - jt * q, n), CharIndex::of(dv + q, n)};
  res.twists[2] = {CharIndex::of(1 + dv + q, n)};
  res.d1 = FreeMap{1, 2, {Monomial{1, 1, 0}, Monomial{1, 0, jt}}};
  res.d2 = FreeMap{2, 1, {Monomial{1, 0, jt}, Monomial{-1, 1, 0}}};
  return res;
}

/// Checks d1 . d2 = 0 symbolically and that every entry is equivariant:
/// a generator of character a maps to x^i y^k times a generator of
/// character a - i - k q.
inline Report check_resolution(const ResolutionData& res) {
  Report report;
  // d1 . d2 is 1x1: sum over the middle summands of monomial products.
  std::map<std::pair<Int, Int>, Int> composite;
  for (std::size_t mid = 0; mid < res.d1.source_rank; ++mid) {
    const auto& a = res.d1.entry(0, mid);
    const auto& b = res.d2.entry(mid, 0);
    composite[{a.x_pow + b.x_pow, a.y_pow + b.y_pow}] += a.coeff * b.coeff;
  }
  bool zero = true;
  for (const auto& [mono, c] : composite) zero = zero && c == 0;
  report.add("resolution-composite", zero);

  CheckBuilder equi("resolution-equivariant");
  auto check_map = [&](const FreeMap& map, const std::vector<CharIndex>& src,
                       const std::vector<CharIndex>& tgt, const std::string& label) {
    for (std::size_t s = 0; s < map.source_rank; ++s) {
      for (std::size_t t = 0; t < map.target_rank; ++t) {
        const auto& mono = map.entry(t, s);
        if (mono.coeff == 0) continue;
        const auto moved = tgt[t].plus(mono.x_pow + mono.y_pow * res.q, res.n);
        equi.expect(moved == src[s], label + "[" + std::to_string(t) + "," + std::to_string(s) + "]");
      }
    }
  };
  check_map(res.d1, res.twists[1], res.twists[0], "d1");
  check_map(res.d2, res.twists[2], res.twists[1], "d2");
  report.add(equi.build());
  return report;
}

/// Invariant part of Hom(F, E') for F a sum of R (x) rho_a: a G-map sends the
/// generator of R (x) rho_a to a vector of character a, so the basis is the
/// pairs (summand, l) with char(y^l in E') = a.
struct InvariantHomSpace {
  std::vector<std::pair<std::size_t, Int>> basis;

  [[nodiscard]] std::size_t dim() const { return basis.size(); }

  [[nodiscard]] std::ptrdiff_t index_of(std::size_t summand, Int l) const {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].first == summand && basis[k].second == l) return static_cast<std::ptrdiff_t>(k);
    }
    return -1;
  }
};

/// C^0 -> C^1 -> C^2 with C^k the invariant part of Hom(F_k, E_d').
struct HomComplex {
  std::array<InvariantHomSpace, 3> terms;
  IntMatrix d0;  // dim C^1 x dim C^0
  IntMatrix d1;  // dim C^2 x dim C^1
};

namespace detail {

inline InvariantHomSpace invariant_hom(const std::vector<CharIndex>& twists,
                                       const ExceptionalObject& target) {
  InvariantHomSpace space;
  for (std::size_t s = 0; s < twists.size(); ++s) {
    for (Int l = 0; l < target.length; ++l) {
      if (target.chars[static_cast<std::size_t>(l)] == twists[s]) space.basis.emplace_back(s, l);
    }
  }
  return space;
}

// Precomposition with `map`: phi |-> phi . map, where phi sends source
// summand generators of the map's target into E'. On E' = R_k, x acts by
// zero and y^b sends y^l to y^{l+b} (zero once l + b >= k).
inline IntMatrix induced(const FreeMap& map, const InvariantHomSpace& from,
                         const InvariantHomSpace& to, Int length) {
  IntMatrix out(to.dim(), from.dim());
  for (std::size_t col = 0; col < from.dim(); ++col) {
    const auto [summand, l] = from.basis[col];
    for (std::size_t s = 0; s < map.source_rank; ++s) {
      const auto& mono = map.entry(summand, s);
      if (mono.coeff == 0 || mono.x_pow > 0) continue;
      const Int shifted = l + mono.y_pow;
      if (shifted >= length) continue;
      const auto row = to.index_of(s, shifted);
      if (row < 0) throw std::logic_error("hom_complex: image leaves the invariant subspace");
      out(static_cast<std::size_t>(row), col) += mono.coeff;
    }
  }
  return out;
}

}  // namespace detail

inline HomComplex hom_complex(const HjExpansion& e, CharIndex d, CharIndex d_prime) {
  const auto res = resolution_of(e, d);
  const auto target = build_object(e, d_prime);
  HomComplex cx;
  for (std::size_t k = 0; k < 3; ++k) cx.terms[k] = detail::invariant_hom(res.twists[k], target);
  cx.d0 = detail::induced(res.d1, cx.terms[0], cx.terms[1], target.length);
  cx.d1 = detail::induced(res.d2, cx.terms[1], cx.terms[2], target.length);
  return cx;
}

/// (dim H^0, dim H^1, dim H^2) of the invariant Hom complex.
inline ExtDims cohomology(const HomComplex& cx) {
  const auto c0 = static_cast<Int>(cx.terms[0].dim());
  const auto c1 = static_cast<Int>(cx.terms[1].dim());
  const auto c2 = static_cast<Int>(cx.terms[2].dim());
  const auto r0 = static_cast<Int>(rank(cx.d0));
  const auto r1 = static_cast<Int>(rank(cx.d1));
  return ExtDims{c0 - r0, (c1 - r1) - r0, c2 - r1};
}

inline ExtDims oracle_ext_dims(const HjExpansion& e, CharIndex d, CharIndex d_prime) {
  return cohomology(hom_complex(e, d, d_prime));
}

/// d1 . d0 = 0, and the alternating sum of term dimensions equals the
/// Euler characteristic of the cohomology.
inline Report check_hom_complex(const HomComplex& cx, const std::string& where) {
  Report report;
  bool composes = true;
  if (cx.d1.cols() != cx.d0.rows()) {
    composes = false;
  } else if (!cx.d1.empty() && !cx.d0.empty()) {
    composes = is_zero(multiply(cx.d1, cx.d0));
  }
  report.add("complex-composite", composes, composes ? "" : where);
  const auto h = cohomology(cx);
  const auto chi = static_cast<Int>(cx.terms[0].dim()) - static_cast<Int>(cx.terms[1].dim()) +
                   static_cast<Int>(cx.terms[2].dim());
  const bool nonneg = h.hom >= 0 && h.ext1 >= 0 && h.ext2 >= 0;
  report.add("complex-euler", h.euler() == chi && nonneg, h.euler() == chi ? "" : where);
  return report;
}

}  // namespace mckay

#endif  // MCKAY_EXT_ORACLE_HPP_
