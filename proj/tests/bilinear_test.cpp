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

#include "cfft11/bilinear.hpp"

#include <array>

#include "cfft11/oracle.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace cfft11 {
namespace {

const Field& F = Field::standard();
using testing::Rng;

TEST(T5, MatricesAsPublished) {
  const auto& a = t5_algorithm();
  EXPECT_EQ(a.p.rows(), 14u);
  EXPECT_EQ(a.p.cols(), 5u);
  EXPECT_EQ(a.r.rows(), 14u);
  EXPECT_EQ(a.r.cols(), 9u);
  EXPECT_EQ(a.q.rows(), 5u);
  EXPECT_EQ(a.q.cols(), 14u);
  EXPECT_EQ(a.multiplications(), 14u);
  EXPECT_EQ(a.r.row_string(0), "111110000");
  EXPECT_EQ(a.p.row_string(13), "11011");
  EXPECT_EQ(a.p.row_string(0), "10000");
}

TEST(T5, ApplySpecialCases) {
  Rng rng(21);
  std::array<Element, 9> r{};
  const auto u = rng.elements(5);
  EXPECT_EQ(t5_apply(F, r, u), std::vector<Element>(5));
  r[4] = Element{1};
  EXPECT_EQ(t5_apply(F, r, u), u);
}

TEST(T5, MatchesNaiveToeplitz) {
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    const auto r = rng.elements(9), u = rng.elements(5);
    MulCounter c;
    ASSERT_EQ(t5_apply(F, r, u, &c), oracle::naive_toeplitz(kDefaultGenPoly, r, u));
    ASSERT_EQ(c.multiplications, 14u);
  }
}

TEST(T10, SpecialCases) {
  Rng rng(23);
  std::array<Element, 19> r{};
  const auto u = rng.elements(10);
  EXPECT_EQ(t10_apply(F, r, u), std::vector<Element>(10));
  r[9] = Element{1};
  EXPECT_EQ(t10_apply(F, r, u), u);
  EXPECT_THROW(t10_apply(F, std::span<const Element>(r).first(18), u), std::invalid_argument);
}

TEST(T10, MatchesNaiveToeplitz) {
  Rng rng(24);
  for (int i = 0; i < 1000; ++i) {
    const auto r = rng.elements(19), u = rng.elements(10);
    MulCounter c;
    ASSERT_EQ(t10_apply(F, r, u, &c), oracle::naive_toeplitz(kDefaultGenPoly, r, u));
    ASSERT_EQ(c.multiplications, 42u);
  }
}

TEST(Conv11, Dimensions) {
  const auto& a = conv11_algorithm();
  EXPECT_EQ(a.p.rows(), 43u);
  EXPECT_EQ(a.p.cols(), 11u);
  EXPECT_EQ(a.r.rows(), 43u);
  EXPECT_EQ(a.r.cols(), 11u);
  EXPECT_EQ(a.q.rows(), 11u);
  EXPECT_EQ(a.q.cols(), 43u);
  EXPECT_EQ(a.multiplications(), 43u);
}

TEST(Conv11, SelectionMatrices) {
  const BitMatrix i5 = BitMatrix::identity(5);
  const BitMatrix z5(5, 5);
  EXPECT_EQ(matrices::pi(3), BitMatrix::hstack({&i5, &i5}));
  EXPECT_EQ(matrices::pi(4), BitMatrix::hstack({&z5, &i5}));
  EXPECT_EQ(matrices::pi(5), BitMatrix::hstack({&i5, &z5}));
  const BitMatrix& p0 = matrices::pi(0);
  for (std::size_t i = 0; i < p0.rows(); ++i) EXPECT_EQ(p0.row_popcount(i), i == 6 ? 10u : 9u) << i;
  EXPECT_THROW(matrices::pi(6), std::out_of_range);
}

// The char-2 Toeplitz matrix acting on X' has entry (i, j) equal to the valid
// one of Y'_{i-j+1}, Y'_{i-j+12} plus the sum of all Y'. Rebuilding the
// coefficient maps of R0, R1 + R0, R2 + R0 from that must give the printed
// selection matrices.
TEST(Conv11, SelectionMatricesFollowFromToeplitzReduction) {
  auto entry = [](int i, int j) {
    std::array<bool, 10> row;
    row.fill(true);
    for (int idx : {i - j + 1, i - j + 12}) {
      if (idx >= 0 && idx <= 9) row[static_cast<std::size_t>(idx)] = !row[static_cast<std::size_t>(idx)];
    }
    return row;
  };
  // Coefficient k of a 5x5 block with top-left corner (i0, j0).
  auto coefficient = [&](int i0, int j0, int k) {
    const int i = std::max(0, 4 - k);
    return entry(i0 + i, j0 + i + k - 4);
  };
  BitMatrix d0(9, 10), d1(9, 10), d2(9, 10);
  for (int k = 0; k < 9; ++k) {
    const auto r0 = coefficient(0, 0, k), r1 = coefficient(0, 5, k), r2 = coefficient(5, 0, k);
    for (std::size_t s = 0; s < 10; ++s) {
      d0.set(static_cast<std::size_t>(k), s, r0[s]);
      d1.set(static_cast<std::size_t>(k), s, r1[s] != r0[s]);
      d2.set(static_cast<std::size_t>(k), s, r2[s] != r0[s]);
    }
  }
  EXPECT_EQ(d0, matrices::pi(0));
  EXPECT_EQ(d1, matrices::pi(1));
  EXPECT_EQ(d2, matrices::pi(2));
}

TEST(Conv11, TransformMatrices) {
  // Printed form: rows 0..9, with the x_9 column absent.
  const BitMatrix printed = BitMatrix::from_rows({
      "1 1 1 1 1 1 1 1 1 1",
      "1 0 0 0 0 0 0 0 0 1",
      "0 1 0 0 0 0 0 0 0 1",
      "0 0 1 0 0 0 0 0 0 1",
      "0 0 0 1 0 0 0 0 0 1",
      "0 0 0 0 1 0 0 0 0 1",
      "0 0 0 0 0 1 0 0 0 1",
      "0 0 0 0 0 0 1 0 0 1",
      "0 0 0 0 0 0 0 1 0 1",
      "0 0 0 0 0 0 0 0 1 1",
  });
  const BitMatrix& t = matrices::transform_t();
  const BitMatrix head = t.block(0, 0, 10, 9);
  const BitMatrix last = t.block(0, 10, 10, 1);
  EXPECT_EQ(BitMatrix::hstack({&head, &last}), printed);
  EXPECT_EQ(t.row_string(10), "00000000011");
  EXPECT_EQ(matrices::transform_s().row_string(1), "11000000000");
  EXPECT_EQ(t.rank(), 11u);
}

TEST(Conv11, SpecialCases) {
  Rng rng(25);
  const auto y = rng.elements(11);
  EXPECT_EQ(conv11_apply(F, testing::unit(11, 0), y), y);
  const std::vector<Element> ones(11, Element{1});
  EXPECT_EQ(conv11_apply(F, ones, ones), ones);
}

TEST(Conv11, MatchesNaiveConvolution) {
  Rng rng(26);
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng.elements(11), y = rng.elements(11);
    MulCounter c;
    ASSERT_EQ(conv11_apply(F, x, y, &c), oracle::naive_cyclic_conv(kDefaultGenPoly, x, y));
    ASSERT_EQ(c.multiplications, 43u);
  }
}

TEST(Conv11, CommutativeAndBilinear) {
  Rng rng(27);
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng.elements(11), y = rng.elements(11), w = rng.elements(11);
    ASSERT_EQ(conv11_apply(F, x, y), conv11_apply(F, y, x));
    std::vector<Element> xw(11);
    for (int k = 0; k < 11; ++k) xw[k] = x[k] + w[k];
    const auto lhs = conv11_apply(F, xw, y);
    const auto a = conv11_apply(F, x, y), b = conv11_apply(F, w, y);
    for (int k = 0; k < 11; ++k) ASSERT_EQ(lhs[k], a[k] + b[k]);
    const auto rhs = conv11_apply(F, y, xw);
    const auto c = conv11_apply(F, y, x), d = conv11_apply(F, y, w);
    for (int k = 0; k < 11; ++k) ASSERT_EQ(rhs[k], c[k] + d[k]);
  }
}

// Over GF(2) the pointwise product is AND, so unit-vector pairs read off the
// whole coefficient tensor of the bilinear form.
TEST(Conv11, ExhaustiveOverGF2Units) {
  const auto& a = conv11_algorithm();
  for (std::size_t i = 0; i < 11; ++i) {
    for (std::size_t j = 0; j < 11; ++j) {
      const auto px = a.p.apply(testing::unit(11, i));
      const auto ry = a.r.apply(testing::unit(11, j));
      std::vector<Element> prod(43);
      for (std::size_t t = 0; t < 43; ++t) prod[t] = Element{static_cast<unsigned>(px[t].value() & ry[t].value())};
      const auto z = a.q.apply(prod);
      ASSERT_EQ(z, testing::unit(11, (i + j) % 11)) << i << "," << j;
    }
  }
}

TEST(Matrices, NamedLookup) {
  for (const auto& name : matrix_names()) EXPECT_TRUE(named_matrix(name).has_value()) << name;
  EXPECT_FALSE(named_matrix("Pi6").has_value());
  EXPECT_EQ(named_matrix("Q11")->rows(), 11u);
  EXPECT_EQ(named_matrix("Q11")->cols(), 43u);
}

}  // namespace
}  // namespace cfft11
