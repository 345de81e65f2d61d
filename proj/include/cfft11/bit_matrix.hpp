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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfft11/gf.hpp"

namespace cfft11 {

// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + kWordBits - 1) / kWordBits),
        words_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  // Rows given as strings of '0'/'1'. Whitespace inside a row is ignored so
  // matrices can be transcribed with spaced entries.
  static BitMatrix from_rows(std::span<const std::string_view> rows) {
    std::vector<std::string> clean;
    clean.reserve(rows.size());
    for (auto r : rows) {
      std::string s;
      for (char c : r) {
        if (c == '0' || c == '1') {
          s.push_back(c);
        } else if (c != ' ' && c != '\t') {
          throw std::invalid_argument("bit matrix row has non-binary character");
        }
      }
      clean.push_back(std::move(s));
    }
    const std::size_t cols = clean.empty() ? 0 : clean.front().size();
    BitMatrix m(clean.size(), cols);
    for (std::size_t i = 0; i < clean.size(); ++i) {
      if (clean[i].size() != cols) throw std::invalid_argument("ragged bit matrix rows");
      for (std::size_t j = 0; j < cols; ++j) {
        if (clean[i][j] == '1') m.set(i, j);
      }
    }
    return m;
  }
  static BitMatrix from_rows(std::initializer_list<std::string_view> rows) {
    return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
  }

  // Inverse of to_text(): one row per line.
  static BitMatrix parse(std::string_view text) {
    std::vector<std::string_view> rows;
    while (!text.empty()) {
      auto nl = text.find('\n');
      auto line = text.substr(0, nl);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!line.empty()) rows.push_back(line);
      if (nl == std::string_view::npos) break;
      text.remove_prefix(nl + 1);
    }
    return from_rows(std::span<const std::string_view>(rows));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const {
    return (row_words(i)[j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v = true) {
    Word& w = words_[i * stride_ + j / kWordBits];
    const Word bit = Word{1} << (j % kWordBits);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t i, std::size_t j) {
    words_[i * stride_ + j / kWordBits] ^= Word{1} << (j % kWordBits);
  }

  std::span<const Word> row_words(std::size_t i) const {
    return {words_.data() + i * stride_, stride_};
  }
  std::span<Word> row_words(std::size_t i) { return {words_.data() + i * stride_, stride_}; }

  std::size_t row_popcount(std::size_t i) const {
    std::size_t c = 0;
    for (Word w : row_words(i)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Calls f(j) for every set column j of row i, in increasing order.
  template <typename F>
  void for_each_one(std::size_t i, F&& f) const {
    auto ws = row_words(i);
    for (std::size_t k = 0; k < ws.size(); ++k) {
      Word w = ws[k];
      while (w) {
        f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  // Direct-implementation XOR count: sum over rows of max(0, ones - 1).
  std::size_t xor_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const std::size_t p = row_popcount(i);
      if (p > 1) total += p - 1;
    }
    return total;
  }

  std::string row_string(std::size_t i) const {
    std::string s(cols_, '0');
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) s[j] = '1';
    }
    return s;
  }

  std::string to_text() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      out += row_string(i);
      out += '\n';
    }
    return out;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for_each_one(i, [&](std::size_t j) { t.set(j, i); });
    }
    return t;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("bit matrix product: shape mismatch");
    BitMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      auto dst = c.row_words(i);
      a.for_each_one(i, [&](std::size_t k) {
        auto src = b.row_words(k);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
      });
    }
    return c;
  }

  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("bit matrix sum: shape mismatch");
    }
    BitMatrix c = a;
    for (std::size_t k = 0; k < c.words_.size(); ++k) c.words_[k] ^= b.words_[k];
    return c;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
  }

  // y_i = XOR of x_j over the set bits of row i.
  template <typename T>
  std::vector<T> apply(std::span<const T> x) const {
    if (x.size() != cols_) throw std::invalid_argument("bit matrix apply: length mismatch");
    std::vector<T> y(rows_, T{});
    for (std::size_t i = 0; i < rows_; ++i) {
      T acc{};
      for_each_one(i, [&](std::size_t j) { acc = acc + x[j]; });
      y[i] = acc;
    }
    return y;
  }
  std::vector<Element> apply(const std::vector<Element>& x) const {
    return apply(std::span<const Element>(x));
  }

  // Matrix times a GF(2) column vector packed in a word; cols() <= 64.
  Word apply_bits(Word x) const {
    if (cols_ > kWordBits) throw std::invalid_argument("apply_bits needs cols <= 64");
    Word y = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (std::popcount(row_words(i)[0] & x) & 1) y |= Word{1} << i;
    }
    return y;
  }

  std::size_t rank() const {
    BitMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && !m.get(piv, c)) ++piv;
      if (piv == rows_) continue;
      m.swap_rows(piv, r);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (m.get(i, c)) m.xor_row_into(r, i);
      }
      ++r;
    }
    return r;
  }

  std::optional<BitMatrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    BitMatrix m = *this;
    BitMatrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && !m.get(piv, c)) ++piv;
      if (piv == n) return std::nullopt;
      m.swap_rows(piv, c);
      inv.swap_rows(piv, c);
      for (std::size_t i = 0; i < n; ++i) {
        if (i != c && m.get(i, c)) {
          m.xor_row_into(c, i);
          inv.xor_row_into(c, i);
        }
      }
    }
    return inv;
  }

  static BitMatrix hstack(std::initializer_list<const BitMatrix*> parts) {
    std::size_t rows = (*parts.begin())->rows_;
    std::size_t cols = 0;
    for (auto* p : parts) {
      if (p->rows_ != rows) throw std::invalid_argument("hstack: row mismatch");
      cols += p->cols_;
    }
    BitMatrix out(rows, cols);
    std::size_t off = 0;
    for (auto* p : parts) {
      out.paste(*p, 0, off);
      off += p->cols_;
    }
    return out;
  }

  static BitMatrix vstack(std::initializer_list<const BitMatrix*> parts) {
    std::size_t cols = (*parts.begin())->cols_;
    std::size_t rows = 0;
    for (auto* p : parts) {
      if (p->cols_ != cols) throw std::invalid_argument("vstack: column mismatch");
      rows += p->rows_;
    }
    BitMatrix out(rows, cols);
    std::size_t off = 0;
    for (auto* p : parts) {
      out.paste(*p, off, 0);
      off += p->rows_;
    }
    return out;
  }

  static BitMatrix block_diag(std::initializer_list<const BitMatrix*> parts) {
    std::size_t rows = 0, cols = 0;
    for (auto* p : parts) {
      rows += p->rows_;
      cols += p->cols_;
    }
    BitMatrix out(rows, cols);
    std::size_t r = 0, c = 0;
    for (auto* p : parts) {
      out.paste(*p, r, c);
      r += p->rows_;
      c += p->cols_;
    }
    return out;
  }

  BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    BitMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) {
        if (get(r0 + i, c0 + j)) out.set(i, j);
      }
    }
    return out;
  }

  void paste(const BitMatrix& src, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < src.rows_; ++i) {
      src.for_each_one(i, [&](std::size_t j) { set(r0 + i, c0 + j); });
    }
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = row_words(a);
    auto rb = row_words(b);
    for (std::size_t k = 0; k < stride_; ++k) std::swap(ra[k], rb[k]);
  }
  void xor_row_into(std::size_t src, std::size_t dst) {
    auto s = row_words(src);
    auto d = row_words(dst);
    for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

}  // namespace cfft11
