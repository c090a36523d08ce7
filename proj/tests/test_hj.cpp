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

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "mckay/hj.hpp"
#include "oracles.hpp"

namespace mckay {
namespace {

using testing::brute_inverse;
using testing::coprime_pairs;
using testing::fold_continued_fraction;

TEST(Expand, FiveTwo) {
  const auto e = expand(5, 2);
  EXPECT_EQ(e.r, 2);
  EXPECT_EQ(e.b, (std::vector<Int>{3, 2}));
  EXPECT_EQ(e.i, (std::vector<Int>{5, 2, 1, 0}));
  EXPECT_EQ(e.j, (std::vector<Int>{0, 1, 3, 5}));
  EXPECT_EQ(e.q_prime, 3);
  const auto f = fold_continued_fraction(e.b);
  EXPECT_EQ(f.num, 5);
  EXPECT_EQ(f.den, 2);
  EXPECT_EQ(brute_inverse(2, 5), 3);
}

TEST(Expand, QEqualsOneIsSingleStep) {
  const auto e = expand(4, 1);
  EXPECT_EQ(e.r, 1);
  EXPECT_EQ(e.b, (std::vector<Int>{4}));
  EXPECT_EQ(e.i, (std::vector<Int>{4, 1, 0}));
  EXPECT_EQ(e.j, (std::vector<Int>{0, 1, 4}));
  EXPECT_EQ(e.q_prime, 1);

  const auto two = expand(2, 1);
  EXPECT_EQ(two.b, (std::vector<Int>{2}));
  EXPECT_EQ(two.i, (std::vector<Int>{2, 1, 0}));
  EXPECT_TRUE(validate(two).passed());
}

TEST(Expand, SevenFive) {
  const auto e = expand(7, 5);
  EXPECT_EQ(e.b, (std::vector<Int>{2, 2, 3}));
  EXPECT_EQ(e.i, (std::vector<Int>{7, 5, 3, 1, 0}));
  EXPECT_EQ(e.j, (std::vector<Int>{0, 1, 2, 3, 7}));
  EXPECT_EQ(e.q_prime, 3);
  const auto f = fold_continued_fraction(e.b);
  EXPECT_EQ(f.num, 7);
  EXPECT_EQ(f.den, 5);
  EXPECT_EQ(brute_inverse(5, 7), 3);
}

TEST(Expand, SlTwoCaseIsAllTwos) {
  const auto e = expand(6, 5);
  EXPECT_EQ(e.b, std::vector<Int>(5, 2));
  EXPECT_EQ(e.i, (std::vector<Int>{6, 5, 4, 3, 2, 1, 0}));
  EXPECT_TRUE(validate(e).passed());
}

TEST(Expand, RejectsBadInput) {
  EXPECT_THROW(expand(4, 2), InvalidInput);
  EXPECT_THROW(expand(6, 3), InvalidInput);
  EXPECT_THROW(expand(5, 0), InvalidInput);
  EXPECT_THROW(expand(5, 5), InvalidInput);
  EXPECT_THROW(expand(5, 7), InvalidInput);
  EXPECT_THROW(expand(1, 1), InvalidInput);
  try {
    expand(4, 2);
  } catch (const InvalidInput& ex) {
    EXPECT_NE(std::string(ex.what()).find("gcd(n,q) must be 1"), std::string::npos);
  }
}

TEST(InverseMod, Examples) {
  EXPECT_EQ(inverse_mod(2, 5), 3);
  EXPECT_EQ(inverse_mod(5, 7), 3);
  for (Int n = 2; n <= 30; ++n) EXPECT_EQ(inverse_mod(1, n), 1);
  EXPECT_EQ(inverse_mod(-2, 5), 2);  // -2 = 3 mod 5
  EXPECT_THROW(inverse_mod(2, 4), InvalidInput);
  EXPECT_THROW(inverse_mod(0, 5), InvalidInput);
  EXPECT_THROW(inverse_mod(1, 1), InvalidInput);
}

TEST(InverseMod, MatchesBruteForce) {
  for (const auto& [n, q] : coprime_pairs(2, 120)) {
    ASSERT_EQ(inverse_mod(q, n), brute_inverse(q, n)) << n << "," << q;
  }
}

TEST(Validate, AllPassOnExpansion) {
  const auto report = validate(expand(5, 2));
  EXPECT_TRUE(report.passed());
  EXPECT_GE(report.checks().size(), 10u);
}

TEST(Validate, TamperedJFailsDeterminantAndRecurrence) {
  auto e = expand(5, 2);
  e.j[2] = 4;
  const auto report = validate(e);
  EXPECT_FALSE(report.passed());
  const auto* det = report.find("determinant");
  ASSERT_NE(det, nullptr);
  EXPECT_FALSE(det->pass);
  EXPECT_NE(det->detail.find("t=1"), std::string::npos);
  const auto* rec = report.find("j-recurrence");
  ASSERT_NE(rec, nullptr);
  EXPECT_FALSE(rec->pass);
}

TEST(Validate, OtherTamperingIsCaught) {
  {
    auto e = expand(7, 5);
    e.b[1] = 1;
    const auto report = validate(e);
    EXPECT_FALSE(report.find("b-minimal")->pass);
    EXPECT_FALSE(report.find("i-recurrence")->pass);
    EXPECT_FALSE(report.find("reconstruction")->pass);
  }
  {
    auto e = expand(7, 5);
    e.q_prime = 4;
    const auto report = validate(e);
    EXPECT_FALSE(report.find("q-prime-inverse")->pass);
    EXPECT_FALSE(report.find("j-duality")->pass);
  }
  {
    auto e = expand(7, 5);
    e.base.q = 4;  // i_1 no longer q
    const auto report = validate(e);
    EXPECT_FALSE(report.find("i-endpoints")->pass);
  }
}

TEST(Validate, MalformedShapeIsReportedNotThrown) {
  auto e = expand(7, 5);
  e.i.pop_back();
  const auto report = validate(e);
  EXPECT_FALSE(report.passed());
  ASSERT_EQ(report.checks().size(), 1u);
  EXPECT_EQ(report.checks()[0].name, "shape");

  HjExpansion empty;
  EXPECT_FALSE(validate(empty).passed());
}

// Properties over every coprime pair up to 200.
TEST(ExpandProperties, SweepValidatesReconstructsAndIsPalindromic) {
  for (const auto& [n, q] : coprime_pairs(2, 200)) {
    const auto e = expand(n, q);
    ASSERT_TRUE(validate(e).passed()) << n << "," << q;
    const auto f = fold_continued_fraction(e.b);
    ASSERT_EQ(f.num, n);
    ASSERT_EQ(f.den, q);
    ASSERT_EQ(e.q_prime, brute_inverse(q, n));
    const auto dual = expand(n, e.q_prime);
    ASSERT_EQ(dual.b, std::vector<Int>(e.b.rbegin(), e.b.rend())) << n << "," << q;
  }
}

}  // namespace
}  // namespace mckay
