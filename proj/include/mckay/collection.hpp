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

#ifndef MCKAY_COLLECTION_HPP_
#define MCKAY_COLLECTION_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mckay/check.hpp"
#include "mckay/hj.hpp"
#include "mckay/reps.hpp"

namespace mckay {

/// E_d = R_{j_t} (x) rho_c with c = d - (j_t - 1) q.
///
/// `chars[l]` is the character of the basis monomial y^l, namely c + l q.
/// The top monomial y^{j_t - 1} carries rho_d (the socle).
struct ExceptionalObject {
  CharIndex d;
  Int level = 0;
  Int length = 0;
  CharIndex twist;
  std::vector<CharIndex> chars;
};

/// The unique t in [1, r] with i_{t-1} > d > i_t. Throws for special d.
inline Int level_of(const HjExpansion& e, CharIndex d) {
  if (d.value() < 0 || d.value() >= e.n()) {
    throw InvalidInput("character " + std::to_string(d.value()) + " outside [0, n-1]");
  }
  // i is strictly decreasing: find the first t with i_t <= d.
  const auto first = std::partition_point(e.i.begin(), e.i.end(),
                                          [&](Int it) { return it > d.value(); });
  const auto t = static_cast<Int>(first - e.i.begin());
  if (t == 0 || t > e.r || *first == d.value()) {
    throw InvalidInput("rho_" + std::to_string(d.value()) + " is special (n=" +
                       std::to_string(e.n()) + ", q=" + std::to_string(e.q()) +
                       "); it has no level");
  }
  return t;
}

inline ExceptionalObject build_object(const HjExpansion& e, CharIndex d) {
  const Int n = e.n();
  const Int q = e.q();
  ExceptionalObject obj;
  obj.d = d;
  obj.level = level_of(e, d);
  obj.length = e.j_at(obj.level);
  obj.twist = d.plus(-(obj.length - 1) * q, n);
  obj.chars.reserve(static_cast<std::size_t>(obj.length));
  for (Int l = 0; l < obj.length; ++l) obj.chars.push_back(obj.twist.plus(l * q, n));
  return obj;
}

/// One object per non-special character, ascending in d.
inline std::vector<ExceptionalObject> build_collection(const HjExpansion& e) {
  std::vector<ExceptionalObject> out;
  for (const auto d : non_specials_of(e)) out.push_back(build_object(e, d));
  return out;
}

/// Checks the invariants of one collection object.
inline Report check_object(const HjExpansion& e, const ExceptionalObject& obj,
                           const std::vector<bool>& specials) {
  Report report;
  const Int n = e.n();
  const Int q = e.q();
  const Int d = obj.d.value();
  const std::string where = "d=" + std::to_string(d);
  const Int t = obj.level;

  report.add("object-level",
             t >= 1 && t <= e.r && e.i_at(t - 1) > d && d > e.i_at(t),
             where + " level=" + std::to_string(t));
  if (t < 1 || t > e.r) return report;

  CheckBuilder shape("object-shape");
  shape.expect(obj.length == e.j_at(t), where + ": length != j_t");
  shape.expect(static_cast<Int>(obj.chars.size()) == obj.length, where + ": len(chars) != length");
  shape.expect(obj.twist == CharIndex::of(d - (e.j_at(t) - 1) * q, n),
               where + ": twist != d - (j_t - 1) q");
  report.add(shape.build());
  if (!shape.ok() || obj.chars.empty()) return report;

  report.add("object-socle", obj.chars.back() == obj.d, where);

  std::set<CharIndex> expected;
  for (Int l = 0; l < obj.length; ++l) expected.insert(CharIndex::of(d - l * q, n));
  const std::set<CharIndex> actual(obj.chars.begin(), obj.chars.end());
  report.add("object-chars", actual == expected && actual.size() == obj.chars.size(),
             where + (actual.size() == obj.chars.size() ? "" : ": repeated character"));

  CheckBuilder closure("object-non-special");
  for (const auto c : obj.chars) {
    closure.expect(!specials[static_cast<std::size_t>(c.value())],
                   where + " contains special " + std::to_string(c.value()));
  }
  report.add(closure.build());

  CheckBuilder socle_min("object-socle-minimal");
  for (const auto c : obj.chars) {
    if (c != obj.d) {
      socle_min.expect(obj.d < c, where + " not below " + std::to_string(c.value()));
    }
  }
  report.add(socle_min.build());
  return report;
}

}  // namespace mckay

#endif  // MCKAY_COLLECTION_HPP_
