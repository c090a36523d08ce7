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

#ifndef MCKAY_CHECK_HPP_
#define MCKAY_CHECK_HPP_

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

/// Thrown when an input violates a documented precondition (non-coprime
/// pair, out-of-range weight, special character where a non-special one is
/// required, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One named invariant with its outcome. `detail` is empty on success and
/// names the offending indices or values on failure.
struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// An ordered list of checks. Failures are report content, never errors.
class Report {
 public:
  Report() = default;

  void add(Check check) { checks_.push_back(std::move(check)); }

  void add(std::string name, bool pass, std::string detail = {}) {
    checks_.push_back(Check{std::move(name), pass, std::move(detail)});
  }

  void append(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  [[nodiscard]] bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const Check& c) { return c.pass; });
  }

  [[nodiscard]] const Check* find(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

/// Accumulates failure locations for a single invariant and turns them into
/// a Check. At most `kMaxListed` locations are spelled out.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) : name_(std::move(name)) {}

  void fail(const std::string& where) {
    if (failures_ < kMaxListed) {
      if (!detail_.empty()) detail_ += "; ";
      detail_ += where;
    }
    ++failures_;
  }

  void expect(bool ok, const std::string& where) {
    if (!ok) fail(where);
  }

  [[nodiscard]] bool ok() const { return failures_ == 0; }

  [[nodiscard]] Check build() const {
    std::string detail = detail_;
    if (failures_ > kMaxListed) {
      detail += "; ... (" + std::to_string(failures_) + " failures)";
    }
    return Check{name_, failures_ == 0, detail};
  }

 private:
  static constexpr int kMaxListed = 8;
  std::string name_;
  std::string detail_;
  int failures_ = 0;
};

}  // namespace mckay

#endif  // MCKAY_CHECK_HPP_
