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

#ifndef MCKAY_KTHEORY_HPP_
#define MCKAY_KTHEORY_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "mckay/bareiss.hpp"
#include "mckay/check.hpp"
#include "mckay/collection.hpp"
#include "mckay/hj.hpp"
#include "mckay/reps.hpp"

namespace mckay {

/// a < b for the order on Z/n induced by representatives in [0, n-1].
constexpr bool precedes(CharIndex a, CharIndex b) { return a.value() < b.value(); }

constexpr bool precedes_or_equal(CharIndex a, CharIndex b) { return a.value() <= b.value(); }

/// K-classes of the collection objects in the basis [O_0 (x) rho_f] over
/// non-special f. Rows follow the collection (ascending d), columns ascend in f.
struct KClassMatrix {
  std::vector<CharIndex> rows;
  std::vector<CharIndex> columns;
  IntMatrix entries;
};

inline KClassMatrix k_matrix(const HjExpansion& e) {
  const auto coll = build_collection(e);
  KClassMatrix km;
  km.columns = non_specials_of(e);
  for (const auto& obj : coll) km.rows.push_back(obj.d);
  km.entries = IntMatrix(km.rows.size(), km.columns.size());
  std::vector<std::ptrdiff_t> column_of(static_cast<std::size_t>(e.n()), -1);
  for (std::size_t c = 0; c < km.columns.size(); ++c) {
    column_of[static_cast<std::size_t>(km.columns[c].value())] = static_cast<std::ptrdiff_t>(c);
  }
  for (std::size_t r = 0; r < coll.size(); ++r) {
    for (const auto ch : coll[r].chars) {
      const auto c = column_of[static_cast<std::size_t>(ch.value())];
      if (c < 0) {
        throw std::logic_error("k_matrix: object E_" + std::to_string(coll[r].d.value()) +
                               " contains special character " + std::to_string(ch.value()));
      }
      km.entries(r, static_cast<std::size_t>(c)) += 1;
    }
  }
  return km;
}

/// Square, unit diagonal, support on or after the diagonal in the order,
/// row sums equal to the object lengths, and entries in {0, 1}.
inline Report check_k_matrix(const HjExpansion& e, const KClassMatrix& km) {
  Report report;
  const auto size = static_cast<std::size_t>(e.n() - e.r - 1);
  const bool square = km.entries.rows() == size && km.entries.cols() == size &&
                      km.rows.size() == size && km.columns.size() == size;
  report.add("kmatrix-square", square, square ? "" : "expected size " + std::to_string(size));
  if (!square) return report;

  CheckBuilder diag("kmatrix-unit-diagonal");
  CheckBuilder support("kmatrix-upper-support");
  CheckBuilder mult("kmatrix-multiplicity-free");
  CheckBuilder sums("kmatrix-row-sums");
  for (std::size_t r = 0; r < size; ++r) {
    const std::string where = "d=" + std::to_string(km.rows[r].value());
    Int sum = 0;
    for (std::size_t c = 0; c < size; ++c) {
      const Int v = km.entries(r, c);
      sum += v;
      mult.expect(v == 0 || v == 1, where);
      if (km.columns[c] == km.rows[r]) {
        diag.expect(v == 1, where);
      } else if (v != 0) {
        support.expect(precedes(km.rows[r], km.columns[c]),
                       where + " f=" + std::to_string(km.columns[c].value()));
      }
    }
    sums.expect(sum == e.j_at(level_of(e, km.rows[r])), where);
  }
  report.add(diag.build());
  report.add(support.build());
  report.add(mult.build());
  report.add(sums.build());
  return report;
}

/// True iff the K-class matrix is unitriangular with determinant 1, so the
/// classes of the E_d span the same lattice as the non-special skyscrapers.
inline bool check_generation(const HjExpansion& e) {
  const auto km = k_matrix(e);
  if (km.rows != km.columns) return false;
  const auto& m = km.entries;
  if (m.rows() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m(r, r) != 1) return false;
    for (std::size_t c = 0; c < r; ++c) {
      if (m(r, c) != 0) return false;
    }
  }
  return determinant(m) == 1;
}

struct CountReport {
  Int n = 0;
  Int r = 0;
  Int specials = 0;
  Int non_specials = 0;
  Int collection_size = 0;

  [[nodiscard]] bool consistent() const {
    return specials == r + 1 && non_specials == n - r - 1 && collection_size == non_specials &&
           collection_size + specials == n;
  }
};

inline CountReport counts_summary(const HjExpansion& e) {
  CountReport c;
  c.n = e.n();
  c.r = e.r;
  const auto mask = special_mask(e);
  c.specials = static_cast<Int>(std::count(mask.begin(), mask.end(), true));
  c.non_specials = static_cast<Int>(non_specials_of(e).size());
  c.collection_size = static_cast<Int>(build_collection(e).size());
  return c;
}

}  // namespace mckay

#endif  // MCKAY_KTHEORY_HPP_
