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

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfft11 {

// Element of GF(2^11) in the polynomial basis: bit i is the coefficient of
// x^i. Addition is XOR and does not need the field.
class Element {
 public:
  using Rep = std::uint16_t;

  constexpr Element() = default;
  constexpr explicit Element(unsigned v) : v_(static_cast<Rep>(v)) {}

  constexpr Rep value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr Element& operator+=(Element o) {
    v_ ^= o.v_;
    return *this;
  }
  friend constexpr Element operator+(Element a, Element b) { return a += b; }
  // Subtraction coincides with addition in characteristic 2.
  friend constexpr Element operator-(Element a, Element b) { return a += b; }
  friend constexpr bool operator==(Element, Element) = default;

 private:
  Rep v_ = 0;
};

inline constexpr unsigned kDegree = 11;
inline constexpr unsigned kFieldSize = 1u << kDegree;    // 2048
inline constexpr unsigned kGroupOrder = kFieldSize - 1;  // 2047
// x^11 + x^2 + 1
inline constexpr std::uint32_t kDefaultGenPoly = (1u << 11) | (1u << 2) | 1u;

// GF(2^11) defined by a degree-11 generator polynomial whose root x is
// primitive. Built once, then shared by const reference; all operations are
// pure.
class Field {
 public:
  explicit Field(std::uint32_t genpoly = kDefaultGenPoly) : genpoly_(genpoly) {
    if (std::bit_width(genpoly) != kDegree + 1) {
      throw std::invalid_argument("generator polynomial must have degree 11");
    }
    if ((genpoly & 1u) == 0) {
      throw std::invalid_argument("generator polynomial must have constant term 1");
    }
    std::uint32_t v = 1;
    log_.fill(0);
    for (unsigned i = 0; i < kGroupOrder; ++i) {
      if (i > 0 && v == 1) {
        throw std::invalid_argument("x is not primitive for generator polynomial " +
                                    std::to_string(genpoly));
      }
      exp_[i] = static_cast<Element::Rep>(v);
      log_[v] = static_cast<Element::Rep>(i);
      v <<= 1;
      if (v & kFieldSize) v ^= genpoly;
    }
    if (v != 1) {
      throw std::invalid_argument("generator polynomial is not primitive");
    }
    for (unsigned i = kGroupOrder; i < exp_.size(); ++i) exp_[i] = exp_[i - kGroupOrder];
    // Primitivity: x^d != 1 for the proper divisors 1, 23, 89 of 2047.
    for (unsigned d : {1u, 23u, 89u}) {
      if (pow(alpha(), d) == one()) {
        throw std::invalid_argument("x does not have order 2047");
      }
    }
  }

  // Process-wide field for x^11 + x^2 + 1.
  static const Field& standard() {
    static const Field f;
    return f;
  }

  std::uint32_t genpoly() const { return genpoly_; }
  static constexpr unsigned degree() { return kDegree; }
  static constexpr unsigned order() { return kGroupOrder; }

  static constexpr Element zero() { return Element{0}; }
  static constexpr Element one() { return Element{1}; }
  static constexpr Element alpha() { return Element{2}; }

  // alpha^k for any k (reduced mod 2047).
  Element exp(std::uint64_t k) const { return Element{exp_[k % kGroupOrder]}; }
  // Discrete log base alpha; a must be nonzero.
  unsigned log(Element a) const {
    if (a.is_zero()) throw std::domain_error("log of zero");
    return log_[a.value()];
  }

  Element mul(Element a, Element b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return Element{exp_[log_[a.value()] + log_[b.value()]]};
  }

  Element pow(Element a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    std::uint64_t l = (static_cast<std::uint64_t>(log_[a.value()]) * (e % kGroupOrder)) %
                      kGroupOrder;
    return Element{exp_[l]};
  }

  Element inv(Element a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero in GF(2^11)");
    return Element{exp_[(kGroupOrder - log_[a.value()]) % kGroupOrder]};
  }

  Element frobenius(Element a) const { return mul(a, a); }

  // Absolute trace to GF(2): sum of the eleven conjugates.
  unsigned trace(Element a) const {
    Element acc = a;
    Element c = a;
    for (unsigned p = 1; p < kDegree; ++p) {
      c = frobenius(c);
      acc += c;
    }
    return acc.value();
  }

 private:
  std::uint32_t genpoly_;
  // exp_ is doubled so mul can index log(a)+log(b) without reduction.
  std::array<Element::Rep, 2 * kGroupOrder> exp_{};
  std::array<Element::Rep, kFieldSize> log_{};
};

using ElementVector = std::vector<Element>;

}  // namespace cfft11
