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

#include <vector>

#include "mckay/collection.hpp"
#include "oracles.hpp"

namespace mckay {
namespace {

using testing::coprime_pairs;

std::vector<Int> values(const std::vector<CharIndex>& chars) {
  std::vector<Int> out;
  for (const auto c : chars) out.push_back(c.value());
  return out;
}

TEST(LevelOf, Examples) {
  const auto e = expand(7, 5);
  EXPECT_EQ(level_of(e, CharIndex::of(4, 7)), 2);
  EXPECT_EQ(level_of(e, CharIndex::of(6, 7)), 1);
  EXPECT_EQ(level_of(e, CharIndex::of(2, 7)), 3);
  EXPECT_THROW(level_of(expand(5, 2), CharIndex::of(1, 5)), InvalidInput);
  EXPECT_THROW(level_of(e, CharIndex::of(0, 7)), InvalidInput);
  EXPECT_THROW(level_of(e, CharIndex::of(5, 7)), InvalidInput);
}

TEST(LevelOf, MatchesLinearScan) {
  for (const auto& [n, q] : coprime_pairs(2, 80)) {
    const auto e = expand(n, q);
    for (const auto d : non_specials_of(e)) {
      Int expected = -1;
      for (Int t = 1; t <= e.r; ++t) {
        if (e.i_at(t - 1) > d.value() && d.value() > e.i_at(t)) expected = t;
      }
      ASSERT_EQ(level_of(e, d), expected);
    }
  }
}

TEST(BuildObject, SevenFive) {
  const auto e = expand(7, 5);
  const auto e2 = build_object(e, CharIndex::of(2, 7));
  EXPECT_EQ(e2.level, 3);
  EXPECT_EQ(e2.length, 3);
  EXPECT_EQ(e2.twist.value(), 6);
  EXPECT_EQ(values(e2.chars), (std::vector<Int>{6, 4, 2}));

  const auto e4 = build_object(e, CharIndex::of(4, 7));
  EXPECT_EQ(e4.level, 2);
  EXPECT_EQ(e4.length, 2);
  EXPECT_EQ(e4.twist.value(), 6);
  EXPECT_EQ(values(e4.chars), (std::vector<Int>{6, 4}));

  EXPECT_THROW(build_object(e, CharIndex::of(3, 7)), InvalidInput);
}

TEST(BuildObject, LengthOneIsSkyscraper) {
  const auto obj = build_object(expand(4, 1), CharIndex::of(3, 4));
  EXPECT_EQ(obj.level, 1);
  EXPECT_EQ(obj.length, 1);
  EXPECT_EQ(obj.twist.value(), 3);
  EXPECT_EQ(values(obj.chars), (std::vector<Int>{3}));
}

TEST(BuildCollection, Examples) {
  const auto coll = build_collection(expand(7, 5));
  ASSERT_EQ(coll.size(), 3u);
  EXPECT_EQ(coll[0].d.value(), 2);
  EXPECT_EQ(coll[1].d.value(), 4);
  EXPECT_EQ(coll[2].d.value(), 6);
  EXPECT_EQ(coll[0].length, 3);
  EXPECT_EQ(coll[1].length, 2);
  EXPECT_EQ(coll[2].length, 1);

  EXPECT_TRUE(build_collection(expand(6, 5)).empty());

  const auto three = build_collection(expand(3, 1));
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].d.value(), 2);
  EXPECT_EQ(three[0].length, 1);
  EXPECT_EQ(three[0].twist.value(), 2);
}

TEST(CollectionProperties, SizeClosureAndSocle) {
  for (const auto& [n, q] : coprime_pairs(2, 100)) {
    const auto e = expand(n, q);
    const auto coll = build_collection(e);
    ASSERT_EQ(static_cast<Int>(coll.size()), n - e.r - 1);
    const auto mask = special_mask(e);
    for (const auto& obj : coll) {
      ASSERT_TRUE(check_object(e, obj, mask).passed()) << n << "," << q << " d=" << obj.d.value();
      for (const auto c : obj.chars) {
        ASSERT_FALSE(mask[static_cast<std::size_t>(c.value())]);
        if (c != obj.d) {
          ASSERT_LT(obj.d.value(), c.value());
        }
      }
    }
  }
}

TEST(CheckObject, FlagsCorruption) {
  const auto e = expand(7, 5);
  const auto mask = special_mask(e);
  auto obj = build_object(e, CharIndex::of(2, 7));
  obj.chars[2] = CharIndex::of(3, 7);
  const auto report = check_object(e, obj, mask);
  EXPECT_FALSE(report.find("object-socle")->pass);
  EXPECT_FALSE(report.find("object-non-special")->pass);

  obj = build_object(e, CharIndex::of(2, 7));
  obj.twist = CharIndex::of(0, 7);
  EXPECT_FALSE(check_object(e, obj, mask).passed());
}

}  // namespace
}  // namespace mckay
