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

#ifndef MCKAY_BAREISS_HPP_
#define MCKAY_BAREISS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mckay {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<value_type>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

/// Matrix product; throws on shape mismatch or overflow.
inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        std::int64_t p;
        if (__builtin_mul_overflow(a(i, k), b(k, j), &p) || __builtin_add_overflow(acc, p, &acc)) {
          throw std::overflow_error("multiply: int64 overflow");
        }
      }
      out(i, j) = acc;
    }
  }
  return out;
}

inline bool is_zero(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

namespace detail {

// (a*b - c*d) / div, exact by Sylvester's identity.
inline std::int64_t bareiss_step(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                 std::int64_t div) {
  std::int64_t ab, cd, diff;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
      __builtin_sub_overflow(ab, cd, &diff)) {
    throw std::overflow_error("bareiss: int64 overflow");
  }
  if (diff % div != 0) throw std::logic_error("bareiss: inexact division");
  return diff / div;
}

struct Elimination {
  std::size_t rank = 0;
  int sign = 1;
  IntMatrix reduced;
};

// Fraction-free (Bareiss) elimination to row echelon form with row pivoting.
inline Elimination bareiss_eliminate(IntMatrix m) {
  Elimination out;
  std::int64_t prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      m.swap_rows(pivot, row);
      out.sign = -out.sign;
    }
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        m(i, j) = bareiss_step(m(row, col), m(i, j), m(i, col), m(row, j), prev);
      }
      m(i, col) = 0;
    }
    prev = m(row, col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

}  // namespace detail

/// Exact rank over Q via fraction-free elimination.
inline std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  return detail::bareiss_eliminate(m).rank;
}

/// Exact determinant of a square matrix; 1 for the 0x0 matrix.
inline std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  if (m.rows() == 0) return 1;
  const auto el = detail::bareiss_eliminate(m);
  if (el.rank < m.rows()) return 0;
  // For a full-rank square matrix Bareiss leaves det (up to row swaps) in the last pivot.
  return el.sign * el.reduced(m.rows() - 1, m.cols() - 1);
}

}  // namespace mckay

#endif  // MCKAY_BAREISS_HPP_
