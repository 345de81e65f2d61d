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

// Exact integer model of the alternate Fourier transform (AFT) of length 11
// over the rationals. The AFT of x is (X0, X') with X0 = sum x and X' the
// coordinates of x(W) in the basis 1, W, ..., W^9 of Q(W), W a primitive 11th
// root of unity. Every quantity carrying a 1/11 is kept scaled by 11, and every
// division by 11 is checked to be exact.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfft11::aft {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer AFT: add overflow");
  return r;
}
inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer AFT: sub overflow");
  return r;
}
inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer AFT: mul overflow");
  return r;
}
inline Int div_exact(Int a, Int d) {
  if (a % d != 0) {
    throw std::logic_error("integer AFT: " + std::to_string(a) + " not divisible by " +
                           std::to_string(d));
  }
  return a / d;
}

}  // namespace checked

// Small dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n, Int scale = 1) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scale;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        for (std::size_t j = 0; j < b.cols_; ++j) {
          c(i, j) = checked::add(c(i, j), checked::mul(a(i, k), b(k, j)));
        }
      }
    }
    return c;
  }

  std::vector<Int> apply(std::span<const Int> x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMatrix apply: length mismatch");
    std::vector<Int> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) y[i] = checked::add(y[i], checked::mul((*this)(i, j), x[j]));
    }
    return y;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> v_;
};

struct AftIntegerModel {
  IntMatrix b;       // 11 x 11 forward AFT
  IntMatrix b_inv11; // 11 * B^-1
  IntMatrix a3;      // 10 x 10 block of 11 * B^-1
};

inline const AftIntegerModel& model() {
  static const AftIntegerModel m = [] {
    AftIntegerModel r{IntMatrix(11, 11), IntMatrix(11, 11), IntMatrix(10, 10)};
    for (std::size_t j = 0; j < 11; ++j) r.b(0, j) = 1;
    for (std::size_t i = 1; i < 11; ++i) {
      r.b(i, i - 1) = 1;
      r.b(i, 10) = -1;
    }
    for (std::size_t i = 0; i < 10; ++i) {
      for (std::size_t j = 0; j < 10; ++j) r.a3(i, j) = (j == i + 1) ? 10 : -1;
    }
    // [1 A1; A2 A3] with A1 = (10, -1, ..., -1) and A2 all ones.
    r.b_inv11(0, 0) = 1;
    r.b_inv11(0, 1) = 10;
    for (std::size_t j = 2; j < 11; ++j) r.b_inv11(0, j) = -1;
    for (std::size_t i = 1; i < 11; ++i) {
      r.b_inv11(i, 0) = 1;
      for (std::size_t j = 1; j < 11; ++j) r.b_inv11(i, j) = r.a3(i - 1, j - 1);
    }
    return r;
  }();
  return m;
}

struct AftVector {
  Int x0 = 0;
  std::array<Int, 10> xp{};
};

// X0 = sum x, X'_i = x_i - x_10.
inline AftVector forward(std::span<const Int> x) {
  if (x.size() != 11) throw std::invalid_argument("aft::forward expects 11 values");
  AftVector out;
  for (Int v : x) out.x0 = checked::add(out.x0, v);
  for (std::size_t i = 0; i < 10; ++i) out.xp[i] = checked::sub(x[i], x[10]);
  return out;
}

// 11 * B^-1 (u0, u') using only A3 u' and sums:
//   11 v0 = u0 - sum(A3 u'),  11 v'_j = u0 + (A3 u')_j.
inline std::array<Int, 11> inverse_scaled(Int u0, std::span<const Int> up) {
  if (up.size() != 10) throw std::invalid_argument("aft::inverse_scaled expects 10 values");
  const auto a3u = model().a3.apply(up);
  std::array<Int, 11> out{};
  Int sum = 0;
  for (std::size_t j = 0; j < 10; ++j) {
    sum = checked::add(sum, a3u[j]);
    out[j + 1] = checked::add(u0, a3u[j]);
  }
  out[0] = checked::sub(u0, sum);
  return out;
}

// Y'_i with the convention that indices outside 0..9 read as zero.
inline Int yp_at(std::span<const Int> yp, long i) {
  return (i >= 0 && i <= 9) ? yp[static_cast<std::size_t>(i)] : 0;
}

// M with X'(W) Y'(W) = sum_k (M X')_k W^k:
//   M_{k,j} = Y'_{k-j} + Y'_{k-j+11} - Y'_{10-j}.
inline IntMatrix product_matrix(std::span<const Int> yp) {
  IntMatrix m(10, 10);
  for (long k = 0; k < 10; ++k) {
    for (long j = 0; j < 10; ++j) {
      Int v = checked::add(yp_at(yp, k - j), yp_at(yp, k - j + 11));
      m(k, j) = checked::sub(v, yp_at(yp, 10 - j));
    }
  }
  return m;
}

// 11 R with 11 R_{i,j} = 11 Y'_{i-j+1} + 11 Y'_{i-j+12} - sum Y'.
inline IntMatrix toeplitz_matrix_scaled(std::span<const Int> yp) {
  Int sum = 0;
  for (Int v : yp) sum = checked::add(sum, v);
  IntMatrix r(10, 10);
  for (long i = 0; i < 10; ++i) {
    for (long j = 0; j < 10; ++j) {
      Int v = checked::mul(11, checked::add(yp_at(yp, i - j + 1), yp_at(yp, i - j + 12)));
      r(i, j) = checked::sub(v, sum);
    }
  }
  return r;
}

// Checks that A3 M = 11 R entrywise and that R is constant along diagonals.
inline bool verify_toeplitz_reduction(std::span<const Int> yp) {
  if (yp.size() != 10) throw std::invalid_argument("verify_toeplitz_reduction expects 10 values");
  const IntMatrix lhs = model().a3 * product_matrix(yp);
  const IntMatrix rhs = toeplitz_matrix_scaled(yp);
  if (!(lhs == rhs)) return false;
  for (std::size_t i = 1; i < 10; ++i) {
    for (std::size_t j = 1; j < 10; ++j) {
      if (rhs(i, j) != rhs(i - 1, j - 1)) return false;
    }
  }
  return true;
}

// 11-point cyclic convolution through the AFT pipeline over exact integers:
// forward AFTs, Z0 = X0 Y0, 11 Z' = (11 R) X', inverse via A3 with a single
// exact division by 11 at the end.
inline std::array<Int, 11> conv11_int(std::span<const Int> x, std::span<const Int> y) {
  if (x.size() != 11 || y.size() != 11) throw std::invalid_argument("conv11_int expects 11 and 11");
  const AftVector fx = forward(x);
  const AftVector fy = forward(y);
  const Int z0 = checked::mul(fx.x0, fy.x0);
  // A3 M X' = 11 R X', so the inverse never needs M itself.
  const auto a3_zp = toeplitz_matrix_scaled(fy.xp).apply(fx.xp);
  std::array<Int, 11> scaled{};
  Int sum = 0;
  for (std::size_t j = 0; j < 10; ++j) {
    sum = checked::add(sum, a3_zp[j]);
    scaled[j + 1] = checked::add(z0, a3_zp[j]);
  }
  scaled[0] = checked::sub(z0, sum);
  std::array<Int, 11> z{};
  for (std::size_t i = 0; i < 11; ++i) z[i] = checked::div_exact(scaled[i], 11);
  return z;
}

}  // namespace cfft11::aft
