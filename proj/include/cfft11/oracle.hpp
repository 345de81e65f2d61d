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

// Brute-force references written straight from the definitions. Field
// arithmetic here is shift-and-XOR with explicit reduction, so none of these
// share code with the table-driven Field or with any bilinear matrix.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cfft11/gf.hpp"

namespace cfft11::oracle {

// Carry-less product reduced modulo genpoly.
inline Element schoolbook_mul(std::uint32_t genpoly, Element a, Element b) {
  std::uint32_t prod = 0;
  for (unsigned i = 0; i < kDegree; ++i) {
    if ((b.value() >> i) & 1u) prod ^= static_cast<std::uint32_t>(a.value()) << i;
  }
  for (int d = 2 * static_cast<int>(kDegree) - 2; d >= static_cast<int>(kDegree); --d) {
    if ((prod >> d) & 1u) prod ^= genpoly << (d - static_cast<int>(kDegree));
  }
  return Element{prod};
}

inline Element schoolbook_pow(std::uint32_t genpoly, Element a, std::uint64_t e) {
  Element r{1};
  for (std::uint64_t i = 0; i < e; ++i) r = schoolbook_mul(genpoly, r, a);
  return r;
}

inline bool divides_group_order(std::size_t n) { return n > 0 && kGroupOrder % n == 0; }

// F_j = f(alpha_n^j), alpha_n = alpha^(2047/n), by Horner's rule.
inline std::vector<Element> naive_dft(std::uint32_t genpoly, std::span<const Element> f) {
  const std::size_t n = f.size();
  if (!divides_group_order(n)) throw std::invalid_argument("naive_dft: length must divide 2047");
  Element root{1};
  for (std::size_t i = 0; i < kGroupOrder / n; ++i) root = schoolbook_mul(genpoly, root, Element{2});
  std::vector<Element> out(n);
  Element point{1};
  for (std::size_t j = 0; j < n; ++j) {
    Element acc{};
    for (std::size_t i = n; i-- > 0;) acc = schoolbook_mul(genpoly, acc, point) + f[i];
    out[j] = acc;
    point = schoolbook_mul(genpoly, point, root);
  }
  return out;
}

// Same transform as a double loop over explicit powers alpha_n^(ij).
inline std::vector<Element> naive_dft_power_sum(std::uint32_t genpoly,
                                                std::span<const Element> f) {
  const std::size_t n = f.size();
  if (!divides_group_order(n)) throw std::invalid_argument("naive_dft: length must divide 2047");
  std::vector<Element> powers(kGroupOrder);
  powers[0] = Element{1};
  for (std::size_t k = 1; k < kGroupOrder; ++k) {
    powers[k] = schoolbook_mul(genpoly, powers[k - 1], Element{2});
  }
  const std::size_t step = kGroupOrder / n;
  std::vector<Element> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Element acc{};
    for (std::size_t i = 0; i < n; ++i) {
      acc += schoolbook_mul(genpoly, f[i], powers[(i * j * step) % kGroupOrder]);
    }
    out[j] = acc;
  }
  return out;
}

// z_i = sum_j x_j y_{(i-j) mod k}, generic over the ring operations.
template <typename T, typename Mul, typename Add>
std::vector<T> naive_cyclic_conv(std::span<const T> x, std::span<const T> y, Mul mul, Add add) {
  if (x.size() != y.size()) throw std::invalid_argument("naive_cyclic_conv: length mismatch");
  const std::size_t k = x.size();
  std::vector<T> z(k, T{});
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) z[i] = add(z[i], mul(x[j], y[(i + k - j) % k]));
  }
  return z;
}

inline std::vector<Element> naive_cyclic_conv(std::uint32_t genpoly, std::span<const Element> x,
                                              std::span<const Element> y) {
  return naive_cyclic_conv<Element>(
      x, y, [genpoly](Element a, Element b) { return schoolbook_mul(genpoly, a, b); },
      [](Element a, Element b) { return a + b; });
}

inline std::vector<std::int64_t> naive_cyclic_conv(std::span<const std::int64_t> x,
                                                   std::span<const std::int64_t> y) {
  return naive_cyclic_conv<std::int64_t>(
      x, y, [](std::int64_t a, std::int64_t b) { return a * b; },
      [](std::int64_t a, std::int64_t b) { return a + b; });
}

// k x k Toeplitz matrix-vector product, row i = (r_{k-1-i}, ..., r_{2k-2-i}).
inline std::vector<Element> naive_toeplitz(std::uint32_t genpoly, std::span<const Element> r,
                                           std::span<const Element> u) {
  const std::size_t k = u.size();
  if (k == 0 || r.size() != 2 * k - 1) throw std::invalid_argument("naive_toeplitz: length mismatch");
  std::vector<Element> v(k);
  for (std::size_t i = 0; i < k; ++i) {
    Element acc{};
    for (std::size_t j = 0; j < k; ++j) acc += schoolbook_mul(genpoly, r[k - 1 - i + j], u[j]);
    v[i] = acc;
  }
  return v;
}

}  // namespace cfft11::oracle
