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

#include "cfft11/oracle.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace cfft11::oracle {
namespace {

using testing::Rng;
constexpr std::uint32_t kPoly = kDefaultGenPoly;

TEST(Oracle, SchoolbookMulSmallCases) {
  EXPECT_EQ(schoolbook_mul(kPoly, Element{2}, Element{3}), Element{6});
  // alpha^11 = alpha^2 + 1.
  EXPECT_EQ(schoolbook_pow(kPoly, Element{2}, 11), Element{0x005});
  EXPECT_EQ(schoolbook_pow(kPoly, Element{2}, kGroupOrder), Element{1});
}

TEST(Oracle, TwoDftsAgree) {
  Rng rng(41);
  for (std::size_t n : {1u, 23u, 89u}) {
    for (int t = 0; t < 5; ++t) {
      const auto f = rng.elements(n);
      ASSERT_EQ(naive_dft(kPoly, f), naive_dft_power_sum(kPoly, f)) << n;
    }
  }
}

TEST(Oracle, DftSpecialCases) {
  std::vector<Element> f(23);
  f[0] = Element{1};
  EXPECT_EQ(naive_dft(kPoly, f), std::vector<Element>(23, Element{1}));
  f.assign(23, Element{});
  f[1] = Element{1};
  const auto g = naive_dft(kPoly, f);
  EXPECT_EQ(g[0], Element{1});
  EXPECT_EQ(g[1], schoolbook_pow(kPoly, Element{2}, 89));
  EXPECT_THROW(naive_dft(kPoly, std::vector<Element>(22)), std::invalid_argument);
}

TEST(Oracle, ConvolutionAgreesWithPolynomialProduct) {
  Rng rng(42);
  const auto x = rng.integers(11, -9, 9), y = rng.integers(11, -9, 9);
  std::vector<std::int64_t> prod(21, 0);
  for (std::size_t i = 0; i < 11; ++i) {
    for (std::size_t j = 0; j < 11; ++j) prod[i + j] += x[i] * y[j];
  }
  const auto z = naive_cyclic_conv(std::span<const std::int64_t>(x), std::span<const std::int64_t>(y));
  for (std::size_t k = 0; k < 11; ++k) EXPECT_EQ(z[k], prod[k] + (k + 11 < 21 ? prod[k + 11] : 0));
}

TEST(Oracle, ToeplitzIdentityCenter) {
  std::vector<Element> r(9);
  r[4] = Element{1};
  Rng rng(43);
  const auto u = rng.elements(5);
  EXPECT_EQ(naive_toeplitz(kPoly, r, u), u);
  EXPECT_THROW(naive_toeplitz(kPoly, std::vector<Element>(8), u), std::invalid_argument);
}

}  // namespace
}  // namespace cfft11::oracle
