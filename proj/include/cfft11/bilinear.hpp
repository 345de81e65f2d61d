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

// Bilinear algorithms over characteristic-2 fields: the 14-multiplication
// length-5 Toeplitz product, the 42-multiplication length-10 Toeplitz product
// built from it, and the 43-multiplication 11-point cyclic convolution.
//
// A bilinear algorithm (P, R, Q) computes z = Q (R y . P x), where "." is the
// pointwise product of two length-t vectors. Only the t pointwise products
// involve two runtime field values; every other step is an XOR network.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfft11/bit_matrix.hpp"
#include "cfft11/gf.hpp"

namespace cfft11 {

// Instrumentation hook for bilinear evaluation.
struct MulCounter {
  std::size_t multiplications = 0;
};

struct BilinearAlgorithm {
  BitMatrix p;  // t x k_x
  BitMatrix r;  // t x k_y
  BitMatrix q;  // k_z x t

  std::size_t multiplications() const { return p.rows(); }

  void validate() const {
    if (p.rows() != r.rows() || q.cols() != p.rows()) {
      throw std::logic_error("bilinear algorithm: inconsistent product count");
    }
  }

  std::vector<Element> apply(const Field& field, std::span<const Element> x,
                             std::span<const Element> y, MulCounter* counter = nullptr) const {
    if (x.size() != p.cols() || y.size() != r.cols()) {
      throw std::invalid_argument("bilinear apply: operand length mismatch");
    }
    std::vector<Element> px = p.apply(x);
    std::vector<Element> ry = r.apply(y);
    for (std::size_t t = 0; t < px.size(); ++t) px[t] = field.mul(ry[t], px[t]);
    if (counter) counter->multiplications += px.size();
    return q.apply(std::span<const Element>(px));
  }
};

// Constant matrices of the construction, transcribed verbatim where printed.
namespace matrices {

// Length-5 Toeplitz product; coefficient vector r = (r0..r8), matrix row i is
// (r_{4-i}, ..., r_{8-i}).
inline const BitMatrix& t5_r() {
  static const BitMatrix m = BitMatrix::from_rows({
      "1 1 1 1 1 0 0 0 0",
      "0 1 1 1 1 1 0 0 0",
      "0 0 1 1 1 1 1 0 0",
      "0 0 0 1 1 1 1 1 0",
      "0 0 0 0 1 1 1 1 1",
      "0 1 0 0 1 0 0 0 0",
      "0 0 1 0 0 0 0 0 0",
      "0 0 0 1 1 0 0 0 0",
      "0 0 0 1 0 0 0 0 0",
      "0 0 0 0 1 1 0 0 0",
      "0 0 0 0 0 1 0 0 0",
      "0 0 0 0 0 0 1 0 0",
      "0 0 0 0 1 0 0 1 0",
      "0 0 0 0 1 0 0 0 0",
  });
  return m;
}

inline const BitMatrix& t5_p() {
  static const BitMatrix m = BitMatrix::from_rows({
      "1 0 0 0 0",
      "0 1 0 0 0",
      "0 0 1 0 0",
      "0 0 0 1 0",
      "0 0 0 0 1",
      "1 1 0 0 0",
      "1 0 1 0 0",
      "1 0 0 1 0",
      "0 1 1 0 0",
      "0 1 0 0 1",
      "0 0 1 1 0",
      "0 0 1 0 1",
      "0 0 0 1 1",
      "1 1 0 1 1",
  });
  return m;
}

inline const BitMatrix& t5_q() {
  static const BitMatrix m = BitMatrix::from_rows({
      "0 0 0 0 1 0 0 0 0 1 0 1 1 1",
      "0 0 0 1 0 0 0 1 0 0 1 0 1 1",
      "0 0 1 0 0 0 1 0 1 0 1 1 0 0",
      "0 1 0 0 0 1 0 0 1 1 0 0 0 1",
      "1 0 0 0 0 1 1 1 0 0 0 0 0 1",
  });
  return m;
}

// Forward transform x -> (sum x, x_0 + x_10, ..., x_9 + x_10): row 0 all ones,
// row i >= 1 has ones at columns i-1 and 10. The published print of this
// matrix drops its last column; this is the full 11 x 11 form.
inline const BitMatrix& transform_t() {
  static const BitMatrix m = [] {
    BitMatrix t(11, 11);
    for (std::size_t j = 0; j < 11; ++j) t.set(0, j);
    for (std::size_t i = 1; i < 11; ++i) {
      t.set(i, i - 1);
      t.set(i, 10);
    }
    return t;
  }();
  return m;
}

// Inverse transform z_0 = sum Z, z_i = Z_0 + Z_i.
inline const BitMatrix& transform_s() {
  static const BitMatrix m = BitMatrix::from_rows({
      "1 1 1 1 1 1 1 1 1 1 1",
      "1 1 0 0 0 0 0 0 0 0 0",
      "1 0 1 0 0 0 0 0 0 0 0",
      "1 0 0 1 0 0 0 0 0 0 0",
      "1 0 0 0 1 0 0 0 0 0 0",
      "1 0 0 0 0 1 0 0 0 0 0",
      "1 0 0 0 0 0 1 0 0 0 0",
      "1 0 0 0 0 0 0 1 0 0 0",
      "1 0 0 0 0 0 0 0 1 0 0",
      "1 0 0 0 0 0 0 0 0 1 0",
      "1 0 0 0 0 0 0 0 0 0 1",
  });
  return m;
}

// Selection matrices feeding the three length-5 Toeplitz products.
// pi(0..2) map the ten transformed y-coordinates to the Toeplitz coefficients
// of R0, R1 + R0 and R2 + R0; pi(3..5) select X'_0 + X'_1, X'_1 and X'_0.
inline const BitMatrix& pi(int k) {
  static const std::array<BitMatrix, 6> ms = {
      BitMatrix::from_rows({
          "1 1 1 1 1 0 1 1 1 1",
          "1 1 1 1 0 1 1 1 1 1",
          "1 1 1 0 1 1 1 1 1 1",
          "1 1 0 1 1 1 1 1 1 1",
          "1 0 1 1 1 1 1 1 1 1",
          "0 1 1 1 1 1 1 1 1 1",
          "1 1 1 1 1 1 1 1 1 1",
          "1 1 1 1 1 1 1 1 1 0",
          "1 1 1 1 1 1 1 1 0 1",
      }),
      BitMatrix::from_rows({
          "1 0 0 0 0 1 0 0 0 0",
          "0 0 0 0 1 0 0 0 0 0",
          "0 0 0 1 0 0 0 0 0 1",
          "0 0 1 0 0 0 0 0 1 0",
          "0 1 0 0 0 0 0 1 0 0",
          "1 0 0 0 0 0 1 0 0 0",
          "0 0 0 0 0 1 0 0 0 0",
          "0 0 0 0 1 0 0 0 0 1",
          "0 0 0 1 0 0 0 0 1 0",
      }),
      BitMatrix::from_rows({
          "0 0 0 0 0 1 0 0 0 0",
          "0 0 0 0 1 0 0 0 0 1",
          "0 0 0 1 0 0 0 0 1 0",
          "0 0 1 0 0 0 0 1 0 0",
          "0 1 0 0 0 0 1 0 0 0",
          "1 0 0 0 0 1 0 0 0 0",
          "0 0 0 0 1 0 0 0 0 0",
          "0 0 0 1 0 0 0 0 0 1",
          "0 0 1 0 0 0 0 0 1 0",
      }),
      BitMatrix::from_rows({
          "1 0 0 0 0 1 0 0 0 0",
          "0 1 0 0 0 0 1 0 0 0",
          "0 0 1 0 0 0 0 1 0 0",
          "0 0 0 1 0 0 0 0 1 0",
          "0 0 0 0 1 0 0 0 0 1",
      }),
      BitMatrix::from_rows({
          "0 0 0 0 0 1 0 0 0 0",
          "0 0 0 0 0 0 1 0 0 0",
          "0 0 0 0 0 0 0 1 0 0",
          "0 0 0 0 0 0 0 0 1 0",
          "0 0 0 0 0 0 0 0 0 1",
      }),
      BitMatrix::from_rows({
          "1 0 0 0 0 0 0 0 0 0",
          "0 1 0 0 0 0 0 0 0 0",
          "0 0 1 0 0 0 0 0 0 0",
          "0 0 0 1 0 0 0 0 0 0",
          "0 0 0 0 1 0 0 0 0 0",
      }),
  };
  if (k < 0 || k > 5) throw std::out_of_range("pi index must be in 0..5");
  return ms[static_cast<std::size_t>(k)];
}

}  // namespace matrices

inline const BilinearAlgorithm& t5_algorithm() {
  static const BilinearAlgorithm alg = [] {
    BilinearAlgorithm a{matrices::t5_p(), matrices::t5_r(), matrices::t5_q()};
    a.validate();
    return a;
  }();
  return alg;
}

inline const BilinearAlgorithm& conv11_algorithm() {
  static const BilinearAlgorithm alg = [] {
    using namespace matrices;
    const BitMatrix one = BitMatrix::identity(1);
    const BitMatrix rp0 = t5_r() * pi(0), rp1 = t5_r() * pi(1), rp2 = t5_r() * pi(2);
    const BitMatrix pp3 = t5_p() * pi(3), pp4 = t5_p() * pi(4), pp5 = t5_p() * pi(5);
    const BitMatrix r_side = BitMatrix::vstack({&rp0, &rp1, &rp2});
    const BitMatrix p_side = BitMatrix::vstack({&pp3, &pp4, &pp5});

    // [Q Q 0; Q 0 Q]: the upper half of the length-10 product sums the
    // R0 and (R1 + R0) terms, the lower half the R0 and (R2 + R0) terms.
    BitMatrix q_side(10, 42);
    q_side.paste(t5_q(), 0, 0);
    q_side.paste(t5_q(), 0, 14);
    q_side.paste(t5_q(), 5, 0);
    q_side.paste(t5_q(), 5, 28);

    BilinearAlgorithm a{
        BitMatrix::block_diag({&one, &p_side}) * transform_t(),
        BitMatrix::block_diag({&one, &r_side}) * transform_t(),
        transform_s() * BitMatrix::block_diag({&one, &q_side}),
    };
    a.validate();
    return a;
  }();
  return alg;
}

// v = T u with T the 5 x 5 Toeplitz matrix of r (row i = r_{4-i}..r_{8-i}).
inline std::vector<Element> t5_apply(const Field& field, std::span<const Element> r,
                                     std::span<const Element> u,
                                     MulCounter* counter = nullptr) {
  if (r.size() != 9 || u.size() != 5) throw std::invalid_argument("t5_apply expects 9 and 5");
  return t5_algorithm().apply(field, u, r, counter);
}

// 10 x 10 Toeplitz product, row i = r_{9-i}..r_{18-i}, via three length-5
// products on the 2 x 2 block split [R0 R1; R2 R0]:
//   top    = R0 (u0 + u1) + (R1 - R0) u1
//   bottom = R0 (u0 + u1) + (R2 - R0) u0
// with subtraction realised as XOR.
inline std::vector<Element> t10_apply(const Field& field, std::span<const Element> r,
                                      std::span<const Element> u,
                                      MulCounter* counter = nullptr) {
  if (r.size() != 19 || u.size() != 10) throw std::invalid_argument("t10_apply expects 19 and 10");
  // In block coordinates R0 has coefficients r[5..13], R1 r[10..18], R2 r[0..8].
  std::array<Element, 9> r0{}, r1_plus_r0{}, r2_plus_r0{};
  for (std::size_t k = 0; k < 9; ++k) {
    r0[k] = r[k + 5];
    r1_plus_r0[k] = r[k + 10] + r[k + 5];
    r2_plus_r0[k] = r[k] + r[k + 5];
  }
  std::array<Element, 5> u0{}, u1{}, usum{};
  for (std::size_t k = 0; k < 5; ++k) {
    u0[k] = u[k];
    u1[k] = u[k + 5];
    usum[k] = u0[k] + u1[k];
  }
  const auto m0 = t5_apply(field, r0, usum, counter);
  const auto m1 = t5_apply(field, r1_plus_r0, u1, counter);
  const auto m2 = t5_apply(field, r2_plus_r0, u0, counter);
  std::vector<Element> v(10);
  for (std::size_t k = 0; k < 5; ++k) {
    v[k] = m0[k] + m1[k];
    v[k + 5] = m0[k] + m2[k];
  }
  return v;
}

// z_i = sum_j x_j y_{(i-j) mod 11} with 43 general multiplications.
inline std::vector<Element> conv11_apply(const Field& field, std::span<const Element> x,
                                         std::span<const Element> y,
                                         MulCounter* counter = nullptr) {
  if (x.size() != 11 || y.size() != 11) throw std::invalid_argument("conv11_apply expects 11 and 11");
  return conv11_algorithm().apply(field, x, y, counter);
}

// Matrix lookup by the names used on the command line.
inline std::optional<BitMatrix> named_matrix(std::string_view name) {
  using namespace matrices;
  if (name == "T") return transform_t();
  if (name == "S") return transform_s();
  if (name == "PT5") return t5_p();
  if (name == "RT5") return t5_r();
  if (name == "QT5") return t5_q();
  if (name == "P11") return conv11_algorithm().p;
  if (name == "R11") return conv11_algorithm().r;
  if (name == "Q11") return conv11_algorithm().q;
  if (name.size() == 3 && name.substr(0, 2) == "Pi" && name[2] >= '0' && name[2] <= '5') {
    return pi(name[2] - '0');
  }
  return std::nullopt;
}

inline std::vector<std::string> matrix_names() {
  return {"T", "S", "Pi0", "Pi1", "Pi2", "Pi3", "Pi4", "Pi5",
          "PT5", "RT5", "QT5", "P11", "R11", "Q11"};
}

}  // namespace cfft11
