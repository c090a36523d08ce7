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

#ifndef MCKAY_EXT_HPP_
#define MCKAY_EXT_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "mckay/check.hpp"
#include "mckay/collection.hpp"
#include "mckay/hj.hpp"
#include "mckay/reps.hpp"

namespace mckay {

/// R_k (x) rho_a with R_k = C[x, y]/(x, y^k). The basis monomial y^l has
/// character a + l q.
struct QuotientModuleWithTwist {
  Int length = 0;
  CharIndex twist;

  [[nodiscard]] CharIndex char_of(Int l, Int q, Int n) const { return twist.plus(l * q, n); }
};

struct ExtDims {
  Int hom = 0;
  Int ext1 = 0;
  Int ext2 = 0;

  [[nodiscard]] Int euler() const { return hom - ext1 + ext2; }

  friend bool operator==(const ExtDims&, const ExtDims&) = default;
};

inline std::string to_string(const ExtDims& x) {
  return "(" + std::to_string(x.hom) + "," + std::to_string(x.ext1) + "," +
         std::to_string(x.ext2) + ")";
}

/// Characters of kernel and cokernel of multiplication by y^m.
struct KernelCokernel {
  std::vector<CharIndex> kernel;
  std::vector<CharIndex> cokernel;
};

inline Int count_trivial(const std::vector<CharIndex>& chars) {
  return static_cast<Int>(std::count_if(chars.begin(), chars.end(),
                                        [](CharIndex c) { return c.is_trivial(); }));
}

/// y^m : src -> dst between modules of equal length k. Equivariance forces
/// dst.twist = src.twist - m q. The kernel is spanned by y^l with l >= k - m,
/// the cokernel by y^l with l < min(m, k).
inline KernelCokernel mult_by_y_power(const QuotientModuleWithTwist& src,
                                      const QuotientModuleWithTwist& dst, Int m, Int q, Int n) {
  if (src.length != dst.length || src.length < 0) {
    throw InvalidInput("mult_by_y_power: length mismatch");
  }
  if (m < 0) throw InvalidInput("mult_by_y_power: negative exponent");
  if (dst.twist != src.twist.plus(-m * q, n)) {
    throw InvalidInput("mult_by_y_power: twist mismatch (y^" + std::to_string(m) +
                       " is not equivariant from twist " +
                       std::to_string(src.twist.value()) + " to " +
                       std::to_string(dst.twist.value()) + ")");
  }
  const Int k = src.length;
  const Int image = std::min(m, k);
  KernelCokernel out;
  for (Int l = k - image; l < k; ++l) out.kernel.push_back(src.char_of(l, q, n));
  for (Int l = 0; l < image; ++l) out.cokernel.push_back(dst.char_of(l, q, n));
  return out;
}

/// The alpha and beta complexes for the pair (E_d, E_d'), each the
/// multiplication by y^{j_t} between two copies of R_{j_t'}.
struct ExtComplexes {
  Int m = 0;
  QuotientModuleWithTwist alpha_src, alpha_dst, beta_src, beta_dst;
  KernelCokernel alpha, beta;
};

inline ExtComplexes ext_complexes(const HjExpansion& e, CharIndex d, CharIndex d_prime) {
  const Int n = e.n();
  const Int q = e.q();
  const Int jt = e.j_at(level_of(e, d));
  const Int jt2 = e.j_at(level_of(e, d_prime));
  const Int diff = d_prime.value() - d.value();

  ExtComplexes cx;
  cx.m = jt;
  cx.alpha_src = {jt2, CharIndex::of(diff + (jt - jt2) * q, n)};
  cx.alpha_dst = {jt2, CharIndex::of(diff - jt2 * q, n)};
  cx.beta_src = {jt2, CharIndex::of(diff - 1 + (jt - jt2) * q, n)};
  cx.beta_dst = {jt2, CharIndex::of(diff - 1 - jt2 * q, n)};
  cx.alpha = mult_by_y_power(cx.alpha_src, cx.alpha_dst, jt, q, n);
  cx.beta = mult_by_y_power(cx.beta_src, cx.beta_dst, jt, q, n);
  return cx;
}

/// Hom = (ker a)^G, Ext^1 = (coker a)^G + (ker b)^G, Ext^2 = (coker b)^G,
/// where invariants are counted as trivial characters.
inline ExtDims ext_dims_pair(const HjExpansion& e, CharIndex d, CharIndex d_prime) {
  const auto cx = ext_complexes(e, d, d_prime);
  return ExtDims{count_trivial(cx.alpha.kernel),
                 count_trivial(cx.alpha.cokernel) + count_trivial(cx.beta.kernel),
                 count_trivial(cx.beta.cokernel)};
}

/// Euler pairing from the four free terms of the resolution of E_d: the
/// signed count of trivial characters of E_d' (x) rho_{-a} over the twists a.
/// Independent of how the dimensions are distributed among degrees.
inline Int euler_pairing(const HjExpansion& e, CharIndex d, CharIndex d_prime) {
  const Int n = e.n();
  const Int q = e.q();
  const auto target = build_object(e, d_prime);
  const Int jt = e.j_at(level_of(e, d));
  const Int dv = d.value();
  auto invariants = [&](Int a) {
    Int c = 0;
    for (const auto ch : target.chars) c += ch == CharIndex::of(a, n) ? 1 : 0;
    return c;
  };
  const Int a0 = dv + q - jt * q;
  const Int a1 = 1 + dv + q - jt * q;
  const Int a2 = dv + q;
  const Int a3 = 1 + dv + q;
  return invariants(a0) - invariants(a1) - invariants(a2) + invariants(a3);
}

inline std::string char_list(const std::vector<CharIndex>& chars) {
  std::string s = "{";
  for (std::size_t k = 0; k < chars.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(chars[k].value());
  }
  return s + "}";
}

/// Diagonal pairs give (1,0,0); pairs whose target precedes the source in
/// the collection (d > d') give (0,0,0).
inline Report verify_exceptional(const HjExpansion& e) {
  Report report;
  const auto coll = build_collection(e);
  CheckBuilder diag("exceptional-diagonal");
  CheckBuilder lower("exceptional-vanishing");
  for (const auto& src : coll) {
    for (const auto& dst : coll) {
      if (dst.d > src.d) continue;
      const auto cx = ext_complexes(e, src.d, dst.d);
      const ExtDims dims{count_trivial(cx.alpha.kernel),
                         count_trivial(cx.alpha.cokernel) + count_trivial(cx.beta.kernel),
                         count_trivial(cx.beta.cokernel)};
      const ExtDims want = src.d == dst.d ? ExtDims{1, 0, 0} : ExtDims{0, 0, 0};
      if (dims != want) {
        auto& sink = src.d == dst.d ? diag : lower;
        sink.fail("(d=" + std::to_string(src.d.value()) + ",d'=" +
                  std::to_string(dst.d.value()) + ") -> " + to_string(dims) +
                  " ker a=" + char_list(cx.alpha.kernel) +
                  " coker a=" + char_list(cx.alpha.cokernel) +
                  " ker b=" + char_list(cx.beta.kernel) +
                  " coker b=" + char_list(cx.beta.cokernel));
      }
    }
  }
  report.add(diag.build());
  report.add(lower.build());
  return report;
}

}  // namespace mckay

#endif  // MCKAY_EXT_HPP_
