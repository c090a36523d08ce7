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

#ifndef MCKAY_REPS_HPP_
#define MCKAY_REPS_HPP_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "mckay/check.hpp"
#include "mckay/hj.hpp"

namespace mckay {

/// A character rho_a of Z/n, stored as its representative a in [0, n-1].
/// Tensor product of characters is addition of residues.
class CharIndex {
 public:
  constexpr CharIndex() = default;

  static constexpr CharIndex of(Int a, Int n) { return CharIndex(mod(a, n)); }

  [[nodiscard]] constexpr Int value() const { return value_; }

  /// rho_a (x) rho_k
  [[nodiscard]] constexpr CharIndex plus(Int k, Int n) const { return of(value_ + k, n); }

  [[nodiscard]] constexpr bool is_trivial() const { return value_ == 0; }

  friend constexpr auto operator<=>(const CharIndex&, const CharIndex&) = default;

 private:
  explicit constexpr CharIndex(Int v) : value_(v) {}
  Int value_ = 0;
};

// ---------------------------------------------------------------------------
// Special representations.

/// The special characters i_0 = 0, i_1, ..., i_r (as residues, in that order).
inline std::vector<CharIndex> specials_of(const HjExpansion& e) {
  std::vector<CharIndex> out;
  out.reserve(static_cast<std::size_t>(e.r + 1));
  for (Int t = 0; t <= e.r; ++t) out.push_back(CharIndex::of(e.i_at(t), e.n()));
  return out;
}

/// mask[a] is true iff rho_a is special.
inline std::vector<bool> special_mask(const HjExpansion& e) {
  std::vector<bool> mask(static_cast<std::size_t>(e.n()), false);
  for (const auto c : specials_of(e)) mask[static_cast<std::size_t>(c.value())] = true;
  return mask;
}

inline bool is_special(const HjExpansion& e, CharIndex d) {
  if (d.is_trivial()) return true;
  for (Int t = 1; t <= e.r; ++t) {
    if (e.i_at(t) == d.value()) return true;
  }
  return false;
}

/// Non-special characters in ascending order of representative.
inline std::vector<CharIndex> non_specials_of(const HjExpansion& e) {
  const auto mask = special_mask(e);
  std::vector<CharIndex> out;
  for (Int a = 0; a < e.n(); ++a) {
    if (!mask[static_cast<std::size_t>(a)]) out.push_back(CharIndex::of(a, e.n()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Digit expansions d = d_1 i_1 + ... + d_r i_r.

/// Digits of a character with respect to the i-sequence, together with the
/// dual value f = d_1 j_1 + ... + d_r j_r. `digits[t-1]` holds d_t.
struct DigitVector {
  CharIndex d;
  std::vector<Int> digits;
  Int f = 0;

  [[nodiscard]] Int digit(Int t) const { return digits.at(static_cast<std::size_t>(t - 1)); }
};

/// Sum of d_t * i_t.
inline Int digit_value(const HjExpansion& e, std::span<const Int> digits) {
  Int v = 0;
  for (Int t = 1; t <= static_cast<Int>(digits.size()); ++t) {
    v += digits[static_cast<std::size_t>(t - 1)] * e.i_at(t);
  }
  return v;
}

/// Sum of d_t * j_t.
inline Int dual_value(const HjExpansion& e, std::span<const Int> digits) {
  Int v = 0;
  for (Int t = 1; t <= static_cast<Int>(digits.size()); ++t) {
    v += digits[static_cast<std::size_t>(t - 1)] * e.j_at(t);
  }
  return v;
}

/// Greedy expansion: the tail bound sum_{t > t0} d_t i_t < i_{t0} is exactly
/// the loop invariant, so the greedy digits are the unique solution.
inline DigitVector digits_of(const HjExpansion& e, CharIndex d) {
  DigitVector out;
  out.d = d;
  out.digits.assign(static_cast<std::size_t>(e.r), 0);
  Int rest = d.value();
  for (Int t = 1; t <= e.r; ++t) {
    const Int dt = rest / e.i_at(t);
    out.digits[static_cast<std::size_t>(t - 1)] = dt;
    rest -= dt * e.i_at(t);
    out.f += dt * e.j_at(t);
  }
  return out;
}

/// Digit bounds 0 <= d_t <= b_t - 1, and between any two maximal digits
/// (d_t = b_t - 1) some intermediate d_l <= b_l - 3.
inline bool is_valid_digits(const HjExpansion& e, std::span<const Int> digits) {
  if (static_cast<Int>(digits.size()) != e.r) return false;
  bool open_max = false;
  for (Int t = 1; t <= e.r; ++t) {
    const Int dt = digits[static_cast<std::size_t>(t - 1)];
    const Int bt = e.b_at(t);
    if (dt < 0 || dt > bt - 1) return false;
    if (dt == bt - 1) {
      if (open_max) return false;
      open_max = true;
    } else if (dt <= bt - 3) {
      open_max = false;
    }
  }
  return true;
}

namespace detail {

inline void enumerate_digits(const HjExpansion& e, Int t, bool open_max,
                             std::vector<Int>& prefix, std::vector<std::vector<Int>>& out) {
  if (t > e.r) {
    out.push_back(prefix);
    return;
  }
  const Int bt = e.b_at(t);
  for (Int dt = 0; dt <= bt - 1; ++dt) {
    const bool is_max = dt == bt - 1;
    if (is_max && open_max) continue;
    const bool next_open = is_max || (open_max && dt > bt - 3);
    prefix.push_back(dt);
    enumerate_digits(e, t + 1, next_open, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Every digit sequence satisfying is_valid_digits, in lexicographic order.
/// Every valid prefix extends by zeros, so the search never backtracks out of
/// a dead branch and visits O(n r) nodes.
inline std::vector<std::vector<Int>> enumerate_valid_digits(const HjExpansion& e) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> prefix;
  prefix.reserve(static_cast<std::size_t>(e.r));
  detail::enumerate_digits(e, 1, false, prefix, out);
  return out;
}

/// Checks the invariants of a single DigitVector.
inline Report check_digit_vector(const HjExpansion& e, const DigitVector& dv) {
  Report report;
  const Int n = e.n();
  const std::string where = "d=" + std::to_string(dv.d.value());
  if (static_cast<Int>(dv.digits.size()) != e.r) {
    report.add("digit-shape", false, where + ": len(digits) != r");
    return report;
  }
  report.add("digit-sum", digit_value(e, dv.digits) == dv.d.value(), where);

  CheckBuilder tail("tail-bound");
  for (Int t0 = 0; t0 <= e.r; ++t0) {
    Int s = 0;
    for (Int t = t0 + 1; t <= e.r; ++t) s += dv.digit(t) * e.i_at(t);
    tail.expect(0 <= s && s < e.i_at(t0), where + " t0=" + std::to_string(t0));
  }
  report.add(tail.build());

  report.add("digit-validity", is_valid_digits(e, dv.digits), where);

  CheckBuilder dual("dual-value");
  dual.expect(dv.f == dual_value(e, dv.digits), where + ": f != sum d_t j_t");
  dual.expect(0 <= dv.f && dv.f <= n - 1, where + ": f outside [0, n-1]");
  dual.expect(mod_wide(static_cast<__int128>(e.q()) * dv.f, n) == dv.d.value(),
              where + ": q*f != d mod n");
  report.add(dual.build());
  return report;
}

}  // namespace mckay

#endif  // MCKAY_REPS_HPP_
