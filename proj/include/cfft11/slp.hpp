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

// Straight-line programs of XORs and multiplications by constants.
//
// Temporaries are numbered by instruction: op k defines t<k>. Text form, one
// instruction per line:
//
//   t<k> = load in<i>
//   t<k> = xor t<i> t<j>
//   t<k> = cmul 0x<hex-const> t<i>
//   out<k> = t<i>
//
// Multiplications by 0 and 1 never appear: they are folded while compiling, so
// the cmul count of a program is its multiplicative complexity.

#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfft11/bilinear.hpp"
#include "cfft11/cfft.hpp"
#include "cfft11/gf.hpp"

namespace cfft11 {

enum class OpKind : std::uint8_t { kLoad, kXor, kCmul };

struct SlpOp {
  OpKind kind = OpKind::kLoad;
  std::uint32_t a = 0;  // input index for load, first operand otherwise
  std::uint32_t b = 0;  // second xor operand
  Element constant;     // cmul only

  friend bool operator==(const SlpOp&, const SlpOp&) = default;
};

struct Slp {
  std::size_t inputs = 0;
  std::vector<SlpOp> ops;
  std::vector<std::uint32_t> outputs;  // out<k> = t<outputs[k]>

  friend bool operator==(const Slp&, const Slp&) = default;
};

struct OpCounts {
  std::size_t loads = 0;
  std::size_t xors = 0;
  std::size_t cmuls = 0;
};

inline OpCounts op_counts(const Slp& slp) {
  OpCounts c;
  for (const auto& op : slp.ops) {
    switch (op.kind) {
      case OpKind::kLoad: ++c.loads; break;
      case OpKind::kXor: ++c.xors; break;
      case OpKind::kCmul: ++c.cmuls; break;
    }
  }
  return c;
}

inline void validate(const Slp& slp) {
  for (std::size_t k = 0; k < slp.ops.size(); ++k) {
    const auto& op = slp.ops[k];
    auto earlier = [&](std::uint32_t t) {
      if (t >= k) throw std::logic_error("slp: t" + std::to_string(k) + " uses a later temporary");
    };
    switch (op.kind) {
      case OpKind::kLoad:
        if (op.a >= slp.inputs) throw std::logic_error("slp: load index out of range");
        break;
      case OpKind::kXor:
        earlier(op.a);
        earlier(op.b);
        break;
      case OpKind::kCmul:
        earlier(op.a);
        if (op.constant.value() <= 1) throw std::logic_error("slp: trivial cmul constant");
        break;
    }
  }
  for (auto o : slp.outputs) {
    if (o >= slp.ops.size()) throw std::logic_error("slp: output references missing temporary");
  }
}

inline std::vector<Element> run(const Slp& slp, const Field& field, std::span<const Element> in) {
  if (in.size() != slp.inputs) {
    throw std::invalid_argument("slp: expected " + std::to_string(slp.inputs) + " inputs, got " +
                                std::to_string(in.size()));
  }
  std::vector<Element> t(slp.ops.size());
  for (std::size_t k = 0; k < slp.ops.size(); ++k) {
    const auto& op = slp.ops[k];
    switch (op.kind) {
      case OpKind::kLoad: t[k] = in[op.a]; break;
      case OpKind::kXor: t[k] = t[op.a] + t[op.b]; break;
      case OpKind::kCmul: t[k] = field.mul(op.constant, t[op.a]); break;
    }
  }
  std::vector<Element> out;
  out.reserve(slp.outputs.size());
  for (auto o : slp.outputs) out.push_back(t[o]);
  return out;
}

namespace detail {

class SlpBuilder {
 public:
  using Value = std::optional<std::uint32_t>;  // nullopt is the constant zero

  explicit SlpBuilder(std::size_t inputs) { slp_.inputs = inputs; }

  std::uint32_t load(std::uint32_t i) { return push({OpKind::kLoad, i, 0, {}}); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) { return push({OpKind::kXor, a, b, {}}); }

  Value scale(Element c, Value x) {
    if (!x || c.is_zero()) return std::nullopt;
    if (c == Field::one()) return x;
    return push({OpKind::kCmul, *x, 0, c});
  }

  // Left-to-right XOR chain over the present terms.
  template <typename Range>
  Value sum(const Range& terms) {
    Value acc;
    for (const Value& v : terms) {
      if (!v) continue;
      acc = acc ? Value{add(*acc, *v)} : v;
    }
    return acc;
  }

  void output(Value v) {
    if (!v) throw std::logic_error("slp compile: output is identically zero");
    slp_.outputs.push_back(*v);
  }

  Slp finish() { return std::move(slp_); }

 private:
  std::uint32_t push(SlpOp op) {
    slp_.ops.push_back(op);
    return static_cast<std::uint32_t>(slp_.ops.size() - 1);
  }
  Slp slp_;
};

// Row i of m applied to symbolic values.
inline std::vector<SlpBuilder::Value> apply_rows(SlpBuilder& b, const BitMatrix& m,
                                                 std::span<const SlpBuilder::Value> x) {
  std::vector<SlpBuilder::Value> out(m.rows());
  std::vector<SlpBuilder::Value> terms;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    terms.clear();
    m.for_each_one(i, [&](std::size_t j) { terms.push_back(x[j]); });
    out[i] = b.sum(terms);
  }
  return out;
}

}  // namespace detail

// Direct implementation of a plan: every matrix row becomes an XOR chain.
inline Slp compile(const CfftPlan& plan) {
  using detail::SlpBuilder;
  const auto& conv = conv11_algorithm();
  SlpBuilder b(plan.n);
  std::vector<SlpBuilder::Value> in(plan.n);
  for (std::uint32_t i = 0; i < plan.n; ++i) in[i] = b.load(i);

  std::vector<SlpBuilder::Value> mid(plan.n);
  std::size_t pos = 0;
  for (std::size_t blk = 0; blk < plan.cosets.cosets.size(); ++blk) {
    const auto& consts = plan.constants[blk];
    if (plan.cosets.cosets[blk].size() == 1) {
      mid[pos] = b.scale(consts[0], in[plan.permutation[pos]]);
      ++pos;
      continue;
    }
    std::vector<SlpBuilder::Value> x(kDegree);
    for (unsigned p = 0; p < kDegree; ++p) x[p] = in[plan.permutation[pos + p]];
    auto px = detail::apply_rows(b, conv.p, x);
    for (std::size_t t = 0; t < px.size(); ++t) px[t] = b.scale(consts[t], px[t]);
    auto qz = detail::apply_rows(b, conv.q, px);
    std::copy(qz.begin(), qz.end(), mid.begin() + static_cast<std::ptrdiff_t>(pos));
    pos += kDegree;
  }
  for (auto& v : detail::apply_rows(b, plan.a_matrix, mid)) b.output(v);
  return b.finish();
}

// x -> Q (c . P x) with c = R y for a fixed y.
inline Slp compile(const BilinearAlgorithm& alg, std::span<const Element> fixed_y) {
  using detail::SlpBuilder;
  const std::vector<Element> c = alg.r.apply(fixed_y);
  SlpBuilder b(alg.p.cols());
  std::vector<SlpBuilder::Value> in(alg.p.cols());
  for (std::uint32_t i = 0; i < in.size(); ++i) in[i] = b.load(i);
  auto px = detail::apply_rows(b, alg.p, in);
  for (std::size_t t = 0; t < px.size(); ++t) px[t] = b.scale(c[t], px[t]);
  for (auto& v : detail::apply_rows(b, alg.q, px)) b.output(v);
  return b.finish();
}

// ---------------------------------------------------------------------------
// Text form

inline std::string to_text(const Slp& slp) {
  std::string out;
  char buf[80];
  for (std::size_t k = 0; k < slp.ops.size(); ++k) {
    const auto& op = slp.ops[k];
    switch (op.kind) {
      case OpKind::kLoad:
        std::snprintf(buf, sizeof buf, "t%zu = load in%u\n", k, op.a);
        break;
      case OpKind::kXor:
        std::snprintf(buf, sizeof buf, "t%zu = xor t%u t%u\n", k, op.a, op.b);
        break;
      case OpKind::kCmul:
        std::snprintf(buf, sizeof buf, "t%zu = cmul 0x%03X t%u\n", k,
                      static_cast<unsigned>(op.constant.value()), op.a);
        break;
    }
    out += buf;
  }
  for (std::size_t k = 0; k < slp.outputs.size(); ++k) {
    std::snprintf(buf, sizeof buf, "out%zu = t%u\n", k, slp.outputs[k]);
    out += buf;
  }
  return out;
}

namespace detail {

inline std::uint32_t parse_index(std::string_view tok, std::string_view prefix, int base = 10) {
  if (tok.substr(0, prefix.size()) != prefix) {
    throw std::invalid_argument("slp parse: expected '" + std::string(prefix) + "...', got '" +
                                std::string(tok) + "'");
  }
  tok.remove_prefix(prefix.size());
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v, base);
  if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty()) {
    throw std::invalid_argument("slp parse: bad number '" + std::string(tok) + "'");
  }
  return v;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

// Input arity is taken as one past the largest loaded index.
inline Slp parse_slp(std::string_view text) {
  Slp slp;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    try {
      if (tok.size() < 3 || tok[1] != "=") throw std::invalid_argument("malformed line");
      if (tok[0].starts_with("out")) {
        if (tok.size() != 3) throw std::invalid_argument("malformed output");
        if (detail::parse_index(tok[0], "out") != slp.outputs.size()) {
          throw std::invalid_argument("outputs out of order");
        }
        slp.outputs.push_back(detail::parse_index(tok[2], "t"));
        continue;
      }
      if (!slp.outputs.empty()) throw std::invalid_argument("instruction after outputs");
      if (detail::parse_index(tok[0], "t") != slp.ops.size()) {
        throw std::invalid_argument("temporaries out of order");
      }
      SlpOp op;
      if (tok[2] == "load" && tok.size() == 4) {
        op.kind = OpKind::kLoad;
        op.a = detail::parse_index(tok[3], "in");
        slp.inputs = std::max<std::size_t>(slp.inputs, op.a + 1);
      } else if (tok[2] == "xor" && tok.size() == 5) {
        op.kind = OpKind::kXor;
        op.a = detail::parse_index(tok[3], "t");
        op.b = detail::parse_index(tok[4], "t");
      } else if (tok[2] == "cmul" && tok.size() == 5) {
        op.kind = OpKind::kCmul;
        const auto c = detail::parse_index(tok[3], "0x", 16);
        if (c >= kFieldSize) throw std::invalid_argument("constant out of range");
        op.constant = Element{c};
        op.a = detail::parse_index(tok[4], "t");
      } else {
        throw std::invalid_argument("unknown instruction");
      }
      slp.ops.push_back(op);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("slp line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate(slp);
  return slp;
}

// ---------------------------------------------------------------------------
// Greedy common subexpression elimination.
//
// The XOR part of a program is viewed as a set of expressions: each XOR whose
// value is consumed by a non-XOR instruction, an output, or more than one
// instruction is the root of an expression, and its leaves are the values
// reached through single-use XORs. Repeatedly, the pair of leaves occurring
// together in the most expressions (ties: lowest pair of leaf indices) is
// replaced by one new XOR. Expressions with disjoint leaf sets never interact,
// so each connected group is processed on its own.

struct CseOptions {
  // Pair extractions per connected group per round; 0 means no limit.
  std::size_t max_extractions = 0;
  // Rounds of (flatten, extract, re-emit); 0 runs until a round saves nothing.
  std::size_t max_rounds = 0;
};

namespace detail {

// Pair-extraction on a 0/1 incidence structure: rows are expressions, columns
// are leaves. Column row-sets are bitsets, pair counts are popcounts of their
// intersections, and each column caches its best partner.
class PairGreedy {
 public:
  PairGreedy(std::size_t rows, std::size_t cols, const std::vector<std::vector<std::uint32_t>>& row_cols)
      : rows_(rows), words_((rows + 63) / 64), leaf_cols_(cols) {
    sets_.assign(cols, std::vector<std::uint64_t>(words_, 0));
    for (std::size_t r = 0; r < row_cols.size(); ++r) {
      for (auto c : row_cols[r]) sets_[c][r / 64] |= std::uint64_t{1} << (r % 64);
    }
    pop_.resize(cols);
    for (std::size_t c = 0; c < cols; ++c) pop_[c] = popcount(sets_[c]);
    best_.resize(cols);
    for (std::size_t c = 0; c < cols; ++c) rescan(c);
  }

  // Returns false when no pair occurs in two or more rows.
  bool step() {
    std::size_t top = 1;
    std::pair<std::uint32_t, std::uint32_t> pick{0, 0};
    for (std::uint32_t x = 0; x < best_.size(); ++x) {
      const auto& bx = best_[x];
      if (bx.count < 2 || bx.count < top) continue;
      std::pair<std::uint32_t, std::uint32_t> pr{std::min(x, bx.partner), std::max(x, bx.partner)};
      if (bx.count > top || pr < pick) {
        top = bx.count;
        pick = pr;
      }
    }
    if (top < 2) return false;
    extract(pick.first, pick.second);
    return true;
  }

  std::size_t columns() const { return sets_.size(); }
  std::size_t leaf_columns() const { return leaf_cols_; }
  // Operands of column c (c >= leaf_columns()).
  std::pair<std::uint32_t, std::uint32_t> definition(std::size_t c) const {
    return defs_[c - leaf_cols_];
  }

  std::vector<std::vector<std::uint32_t>> final_rows() const {
    std::vector<std::vector<std::uint32_t>> rows(rows_);
    for (std::uint32_t c = 0; c < sets_.size(); ++c) {
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = sets_[c][w];
        while (bits) {
          rows[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))].push_back(c);
          bits &= bits - 1;
        }
      }
    }
    return rows;
  }

 private:
  struct Best {
    std::uint32_t count = 0;
    std::uint32_t partner = 0;
  };

  static std::uint32_t popcount(const std::vector<std::uint64_t>& s) {
    std::uint32_t c = 0;
    for (auto w : s) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
  }
  std::uint32_t overlap(std::size_t x, std::size_t y) const {
    std::uint32_t c = 0;
    const auto& a = sets_[x];
    const auto& b = sets_[y];
    for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::uint32_t>(std::popcount(a[w] & b[w]));
    return c;
  }

  // Best partner of x: largest overlap, then smallest partner index.
  void rescan(std::size_t x) {
    Best b;
    if (pop_[x] >= 2) {
      for (std::size_t y = 0; y < sets_.size(); ++y) {
        if (y == x || pop_[y] < 2 || pop_[y] <= b.count) continue;
        const auto c = overlap(x, y);
        if (c > b.count) b = {c, static_cast<std::uint32_t>(y)};
      }
    }
    best_[x] = b.count >= 2 ? b : Best{};
  }

  void extract(std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint64_t> both(words_);
    for (std::size_t w = 0; w < words_; ++w) {
      both[w] = sets_[a][w] & sets_[b][w];
      sets_[a][w] &= ~both[w];
      sets_[b][w] &= ~both[w];
    }
    const auto c = static_cast<std::uint32_t>(sets_.size());
    sets_.push_back(std::move(both));
    pop_.push_back(popcount(sets_[c]));
    pop_[a] = popcount(sets_[a]);
    pop_[b] = popcount(sets_[b]);
    defs_.emplace_back(a, b);
    best_.push_back({});

    rescan(a);
    rescan(b);
    rescan(c);
    for (std::uint32_t x = 0; x < c; ++x) {
      if (x == a || x == b) continue;
      if (pop_[x] < 2) {
        best_[x] = {};
        continue;
      }
      if (best_[x].count >= 2 && (best_[x].partner == a || best_[x].partner == b)) {
        rescan(x);
        continue;
      }
      if (pop_[c] >= 2) {
        const auto o = overlap(x, c);
        // c has the largest index, so only a strictly larger count wins.
        if (o >= 2 && o > best_[x].count) best_[x] = {o, c};
      }
    }
  }

  std::size_t rows_;
  std::size_t words_;
  std::size_t leaf_cols_;
  std::vector<std::vector<std::uint64_t>> sets_;
  std::vector<std::uint32_t> pop_;
  std::vector<Best> best_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> defs_;
};

inline Slp cse_round(const Slp& slp, std::size_t max_extractions) {
  const std::size_t n_ops = slp.ops.size();
  std::vector<std::uint32_t> xor_uses(n_ops, 0), other_uses(n_ops, 0);
  for (const auto& op : slp.ops) {
    if (op.kind == OpKind::kXor) {
      ++xor_uses[op.a];
      ++xor_uses[op.b];
    } else if (op.kind == OpKind::kCmul) {
      ++other_uses[op.a];
    }
  }
  for (auto o : slp.outputs) ++other_uses[o];

  auto is_xor = [&](std::uint32_t t) { return slp.ops[t].kind == OpKind::kXor; };
  std::vector<bool> root(n_ops, false);
  for (std::uint32_t t = 0; t < n_ops; ++t) {
    root[t] = is_xor(t) && (other_uses[t] > 0 || xor_uses[t] > 1);
  }

  // Flatten every root into its leaf set, cancelling repeated leaves.
  std::vector<std::uint32_t> roots;
  std::vector<std::vector<std::uint32_t>> leaves;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t t = 0; t < n_ops; ++t) {
    if (!root[t]) continue;
    std::vector<std::uint32_t> acc;
    stack.assign({slp.ops[t].a, slp.ops[t].b});
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      if (is_xor(v) && !root[v]) {
        stack.push_back(slp.ops[v].a);
        stack.push_back(slp.ops[v].b);
      } else {
        acc.push_back(v);
      }
    }
    std::sort(acc.begin(), acc.end());
    std::vector<std::uint32_t> odd;
    for (std::size_t i = 0; i < acc.size();) {
      std::size_t j = i;
      while (j < acc.size() && acc[j] == acc[i]) ++j;
      if ((j - i) % 2 == 1) odd.push_back(acc[i]);
      i = j;
    }
    if (odd.empty()) {
      throw std::domain_error("greedy_cse: t" + std::to_string(t) + " cancels to zero");
    }
    roots.push_back(t);
    leaves.push_back(std::move(odd));
  }

  // Group expressions that share leaves.
  std::vector<std::uint32_t> parent(n_ops);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& l : leaves) {
    for (std::size_t i = 1; i < l.size(); ++i) parent[find(l[i])] = find(l[0]);
  }
  std::vector<std::vector<std::size_t>> groups;  // indices into roots
  std::vector<std::int64_t> group_of(n_ops, -1);
  for (std::size_t e = 0; e < roots.size(); ++e) {
    const auto g = find(leaves[e][0]);
    if (group_of[g] < 0) {
      group_of[g] = static_cast<std::int64_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of[g])].push_back(e);
  }

  // Run the pair greedy per group; record for each expression its final
  // columns and how to materialise each column.
  struct GroupResult {
    std::vector<std::uint32_t> leaf_temps;  // column -> old temporary, leaf columns only
    std::unique_ptr<PairGreedy> greedy;
    std::vector<std::optional<std::uint32_t>> emitted;  // column -> new temporary
  };
  std::vector<GroupResult> results(groups.size());
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> expr_cols(roots.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto& res = results[g];
    for (auto e : groups[g]) res.leaf_temps.insert(res.leaf_temps.end(), leaves[e].begin(), leaves[e].end());
    std::sort(res.leaf_temps.begin(), res.leaf_temps.end());
    res.leaf_temps.erase(std::unique(res.leaf_temps.begin(), res.leaf_temps.end()), res.leaf_temps.end());
    std::vector<std::vector<std::uint32_t>> rows;
    for (auto e : groups[g]) {
      std::vector<std::uint32_t> cols;
      for (auto t : leaves[e]) {
        cols.push_back(static_cast<std::uint32_t>(
            std::lower_bound(res.leaf_temps.begin(), res.leaf_temps.end(), t) - res.leaf_temps.begin()));
      }
      rows.push_back(std::move(cols));
    }
    res.greedy = std::make_unique<PairGreedy>(rows.size(), res.leaf_temps.size(), rows);
    for (std::size_t k = 0; max_extractions == 0 || k < max_extractions; ++k) {
      if (!res.greedy->step()) break;
    }
    auto fin = res.greedy->final_rows();
    for (std::size_t i = 0; i < groups[g].size(); ++i) expr_cols[groups[g][i]] = {g, std::move(fin[i])};
    res.emitted.assign(res.greedy->columns(), std::nullopt);
  }

  // Re-emit in the original order. Every leaf of a root precedes the root, so
  // lazily materialised columns only reference temporaries already emitted.
  Slp out;
  out.inputs = slp.inputs;
  std::vector<std::uint32_t> remap(n_ops, 0);
  auto push = [&](SlpOp op) {
    out.ops.push_back(op);
    return static_cast<std::uint32_t>(out.ops.size() - 1);
  };
  std::function<std::uint32_t(GroupResult&, std::uint32_t)> column = [&](GroupResult& res,
                                                                         std::uint32_t c) {
    if (res.emitted[c]) return *res.emitted[c];
    std::uint32_t t;
    if (c < res.greedy->leaf_columns()) {
      t = remap[res.leaf_temps[c]];
    } else {
      const auto [x, y] = res.greedy->definition(c);
      const auto tx = column(res, x);
      const auto ty = column(res, y);
      t = push({OpKind::kXor, tx, ty, {}});
    }
    res.emitted[c] = t;
    return t;
  };

  std::size_t next_root = 0;
  for (std::uint32_t t = 0; t < n_ops; ++t) {
    const auto& op = slp.ops[t];
    switch (op.kind) {
      case OpKind::kLoad: remap[t] = push(op); break;
      case OpKind::kCmul: remap[t] = push({OpKind::kCmul, remap[op.a], 0, op.constant}); break;
      case OpKind::kXor: {
        if (!root[t]) break;
        auto& [g, cols] = expr_cols[next_root++];
        auto& res = results[g];
        std::uint32_t acc = column(res, cols[0]);
        for (std::size_t i = 1; i < cols.size(); ++i) acc = push({OpKind::kXor, acc, column(res, cols[i]), {}});
        remap[t] = acc;
        break;
      }
    }
  }
  for (auto o : slp.outputs) out.outputs.push_back(remap[o]);
  return out;
}

}  // namespace detail

inline Slp greedy_cse(const Slp& slp, const CseOptions& opts = {}) {
  Slp cur = slp;
  std::size_t cur_xors = op_counts(cur).xors;
  for (std::size_t round = 0; opts.max_rounds == 0 || round < opts.max_rounds; ++round) {
    Slp next = detail::cse_round(cur, opts.max_extractions);
    const std::size_t next_xors = op_counts(next).xors;
    if (next_xors > cur_xors) throw std::logic_error("greedy_cse: xor count increased");
    const bool improved = next_xors < cur_xors;
    cur = std::move(next);
    cur_xors = next_xors;
    if (!improved) break;
  }
  return cur;
}

// Unlimited for programs up to kCseFullLimit xors. Larger programs (the
// n = 2047 plan has about two million) get one round of kCseLargeBudget
// extractions per group, since each extraction there costs milliseconds.
inline constexpr std::size_t kCseFullLimit = 100000;
inline constexpr std::size_t kCseLargeBudget = 1024;

inline CseOptions default_cse_options(const Slp& slp) {
  if (op_counts(slp).xors <= kCseFullLimit) return {};
  return {kCseLargeBudget, 1};
}

}  // namespace cfft11
