// Copyright 2026 The cfft11 Authors.
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

#include "cfft11/bit_matrix.hpp"

#include <random>

#include "gtest/gtest.h"

namespace cfft11 {
namespace {

BitMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& g) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, g() & 1u);
  }
  return m;
}

TEST(BitMatrix, ParseAndPrint) {
  const BitMatrix m = BitMatrix::from_rows({"1 0 1", "0 1 1"});
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m.to_text(), "101\n011\n");
  EXPECT_EQ(BitMatrix::parse(m.to_text()), m);
  EXPECT_THROW(BitMatrix::from_rows({"10", "1"}), std::invalid_argument);
  EXPECT_THROW(BitMatrix::from_rows({"12"}), std::invalid_argument);
}

TEST(BitMatrix, ProductMatchesEntrywiseDefinition) {
  std::mt19937_64 g(7);
  const BitMatrix a = random_matrix(13, 70, g), b = random_matrix(70, 9, g);
  const BitMatrix c = a * b;
  for (std::size_t i = 0; i < 13; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      unsigned s = 0;
      for (std::size_t k = 0; k < 70; ++k) s ^= a.get(i, k) & b.get(k, j);
      ASSERT_EQ(c.get(i, j), s == 1);
    }
  }
  EXPECT_EQ(a.transposed().transposed(), a);
}

TEST(BitMatrix, RankAndInverse) {
  EXPECT_EQ(BitMatrix::identity(100).rank(), 100u);
  const BitMatrix sing = BitMatrix::from_rows({"110", "011", "101"});
  EXPECT_EQ(sing.rank(), 2u);
  EXPECT_FALSE(sing.inverse().has_value());

  std::mt19937_64 g(11);
  int inverted = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const BitMatrix m = random_matrix(67, 67, g);
    auto inv = m.inverse();
    EXPECT_EQ(inv.has_value(), m.rank() == 67);
    if (inv) {
      ++inverted;
      EXPECT_EQ(m * *inv, BitMatrix::identity(67));
    }
  }
  EXPECT_GT(inverted, 0);
}

TEST(BitMatrix, XorCountAndApply) {
  const BitMatrix m = BitMatrix::from_rows({"111", "000", "010", "101"});
  EXPECT_EQ(m.xor_count(), 2u + 0u + 0u + 1u);
  const std::vector<Element> x = {Element{1}, Element{2}, Element{4}};
  const auto y = m.apply(x);
  EXPECT_EQ(y, (std::vector<Element>{Element{7}, Element{0}, Element{2}, Element{5}}));
  EXPECT_EQ(m.apply_bits(0b001), 0b1001u);
  EXPECT_EQ(m.apply_bits(0b101), 0u);
}

TEST(BitMatrix, Stacking) {
  const BitMatrix a = BitMatrix::from_rows({"10"});
  const BitMatrix b = BitMatrix::from_rows({"1"});
  EXPECT_EQ(BitMatrix::block_diag({&a, &b}).to_text(), "100\n001\n");
  EXPECT_EQ(BitMatrix::hstack({&a, &b}).to_text(), "101\n");
  EXPECT_EQ(BitMatrix::vstack({&a, &a}).to_text(), "10\n10\n");
  EXPECT_EQ(BitMatrix::block_diag({&a, &b}).block(1, 1, 1, 2).to_text(), "01\n");
}

}  // namespace
}  // namespace cfft11
