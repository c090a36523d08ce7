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

#ifndef MCKAY_VERIFY_HPP_
#define MCKAY_VERIFY_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mckay/check.hpp"
#include "mckay/collection.hpp"
#include "mckay/ext.hpp"
#include "mckay/ext_oracle.hpp"
#include "mckay/hj.hpp"
#include "mckay/ktheory.hpp"
#include "mckay/reps.hpp"

// Per-instance invariant suites. Each suite condenses its individual checks
// into one Check whose detail names the first failing invariant.

namespace mckay {

namespace detail {

inline Check summarize(const std::string& suite, const Report& inner) {
  for (const auto& c : inner.checks()) {
    if (!c.pass) return Check{suite, false, c.name + (c.detail.empty() ? "" : ": " + c.detail)};
  }
  return Check{suite, true, {}};
}

}  // namespace detail

/// HjExpansion invariants, plus the palindrome relation between 1/n(1,q)
/// and 1/n(1,q').
inline Report hj_suite(const HjExpansion& e) {
  Report inner = validate(e);
  const auto dual = expand(e.n(), inverse_mod(e.q(), e.n()));
  std::vector<Int> reversed(e.b.rbegin(), e.b.rend());
  inner.add("palindrome", dual.b == reversed);
  inner.add("inverse-agrees", inverse_mod(e.q(), e.n()) == e.q_prime);
  Report out;
  out.add(detail::summarize("hj-expansion", inner));
  return out;
}

/// Valid digit sequences biject onto [0, n-1] and coincide with the greedy
/// digits; every greedy DigitVector satisfies its invariants.
inline Check digit_bijection_check(const HjExpansion& e) {
  Report inner;
  const Int n = e.n();
  const auto valid = enumerate_valid_digits(e);
  inner.add("enumeration-size", static_cast<Int>(valid.size()) == n,
            "found " + std::to_string(valid.size()));

  CheckBuilder all_valid("enumeration-valid");
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (const auto& seq : valid) {
    all_valid.expect(is_valid_digits(e, seq), "sequence rejected");
    const Int v = digit_value(e, seq);
    if (v >= 0 && v < n) {
      ++hits[static_cast<std::size_t>(v)];
    } else {
      all_valid.fail("value " + std::to_string(v) + " outside [0, n-1]");
    }
  }
  inner.add(all_valid.build());

  CheckBuilder bij("evaluation-bijective");
  for (Int v = 0; v < n; ++v) {
    bij.expect(hits[static_cast<std::size_t>(v)] == 1,
               "value " + std::to_string(v) + " hit " +
                   std::to_string(hits[static_cast<std::size_t>(v)]) + " times");
  }
  inner.add(bij.build());

  std::set<std::vector<Int>> greedy;
  for (Int d = 0; d < n; ++d) {
    const auto dv = digits_of(e, CharIndex::of(d, n));
    inner.append(check_digit_vector(e, dv));
    greedy.insert(dv.digits);
  }
  const std::set<std::vector<Int>> enumerated(valid.begin(), valid.end());
  inner.add("greedy-equals-enumeration", greedy == enumerated);
  return detail::summarize("digit-bijection", inner);
}

/// q f = d (mod n) with 0 <= f <= n-1 for every character.
inline Check dual_congruence_check(const HjExpansion& e) {
  CheckBuilder b("dual-congruence");
  const Int n = e.n();
  for (Int d = 0; d < n; ++d) {
    const auto dv = digits_of(e, CharIndex::of(d, n));
    b.expect(dv.f >= 0 && dv.f <= n - 1 &&
                 mod_wide(static_cast<__int128>(e.q()) * dv.f, n) == d,
             "d=" + std::to_string(d) + " f=" + std::to_string(dv.f));
  }
  return b.build();
}

/// For 1 <= t <= r+1 and 0 < l < j_t the representative of l q is >= i_{t-1}.
inline Check multiple_bound_check(const HjExpansion& e) {
  CheckBuilder b("multiple-bound");
  const Int n = e.n();
  for (Int t = 1; t <= e.r + 1; ++t) {
    for (Int l = 1; l < e.j_at(t); ++l) {
      b.expect(mod(l * e.q(), n) >= e.i_at(t - 1),
               "t=" + std::to_string(t) + " l=" + std::to_string(l));
    }
  }
  return b.build();
}

/// Non-special d at level t has f >= 2 j_t; special i_t has f = j_t
/// (and f = 0 for the trivial character).
inline Check level_dual_bound_check(const HjExpansion& e) {
  CheckBuilder b("level-dual-bound");
  const Int n = e.n();
  const auto mask = special_mask(e);
  for (Int d = 0; d < n; ++d) {
    const auto c = CharIndex::of(d, n);
    const auto dv = digits_of(e, c);
    const std::string where = "d=" + std::to_string(d) + " f=" + std::to_string(dv.f);
    if (d == 0) {
      b.expect(dv.f == 0, where);
    } else if (mask[static_cast<std::size_t>(d)]) {
      Int t = 1;
      while (e.i_at(t) != d) ++t;
      b.expect(dv.f == e.j_at(t), where + " (special)");
    } else {
      b.expect(dv.f >= 2 * e.j_at(level_of(e, c)), where);
    }
  }
  return b.build();
}

inline Check collection_check(const HjExpansion& e) {
  Report inner;
  const auto mask = special_mask(e);
  const auto coll = build_collection(e);
  for (std::size_t k = 0; k < coll.size(); ++k) {
    inner.append(check_object(e, coll[k], mask));
    if (k > 0) inner.add("collection-order", coll[k - 1].d < coll[k].d);
  }
  return detail::summarize("collection", inner);
}

inline Check counts_check(const HjExpansion& e) {
  const auto c = counts_summary(e);
  return Check{"counts", c.consistent(),
               c.consistent() ? ""
                              : "n=" + std::to_string(c.n) + " r=" + std::to_string(c.r) +
                                    " specials=" + std::to_string(c.specials) +
                                    " collection=" + std::to_string(c.collection_size)};
}

/// hom - ext1 + ext2 agrees with the signed invariant count of the
/// resolution's terms for every ordered pair.
inline Check euler_check(const HjExpansion& e) {
  CheckBuilder b("euler-pairing");
  const auto ns = non_specials_of(e);
  for (const auto d : ns) {
    for (const auto dp : ns) {
      b.expect(ext_dims_pair(e, d, dp).euler() == euler_pairing(e, d, dp),
               "(" + std::to_string(d.value()) + "," + std::to_string(dp.value()) + ")");
    }
  }
  return b.build();
}

/// Oracle and formula agree on every ordered pair; the oracle's complexes
/// and resolutions are themselves checked.
inline Report oracle_suite(const HjExpansion& e) {
  Report inner;
  CheckBuilder agree("oracle-agrees");
  const auto ns = non_specials_of(e);
  for (const auto d : ns) {
    inner.append(check_resolution(resolution_of(e, d)));
    for (const auto dp : ns) {
      const std::string where = "(" + std::to_string(d.value()) + "," + std::to_string(dp.value()) + ")";
      const auto cx = hom_complex(e, d, dp);
      inner.append(check_hom_complex(cx, where));
      const auto oracle = cohomology(cx);
      const auto formula = ext_dims_pair(e, d, dp);
      agree.expect(oracle == formula,
                   where + " formula " + to_string(formula) + " oracle " + to_string(oracle));
    }
  }
  inner.add(agree.build());
  Report out;
  out.add(detail::summarize("oracle-equivalence", inner));
  return out;
}

inline Check unitriangularity_check(const HjExpansion& e) {
  Report inner = check_k_matrix(e, k_matrix(e));
  inner.add("generation", check_generation(e));
  return detail::summarize("unitriangularity", inner);
}

/// Every suite for one instance. The oracle cross-check is optional.
inline Report verify_instance(const HjExpansion& e, bool with_oracle) {
  Report report = hj_suite(e);
  report.add(digit_bijection_check(e));
  report.add(dual_congruence_check(e));
  report.add(multiple_bound_check(e));
  report.add(level_dual_bound_check(e));
  report.add(collection_check(e));
  report.add(counts_check(e));
  report.add(detail::summarize("exceptionality", verify_exceptional(e)));
  report.add(euler_check(e));
  if (with_oracle) report.append(oracle_suite(e));
  report.add(unitriangularity_check(e));
  return report;
}

}  // namespace mckay

#endif  // MCKAY_VERIFY_HPP_
