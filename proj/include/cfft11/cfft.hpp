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

// Cyclotomic FFT over GF(2^11) for lengths n dividing 2047.
//
// The input is split along the cyclotomic cosets of 2 modulo n. For a coset
// with representative k and members k 2^p, the partial sum
//
//   L(w) = sum_p f_{k 2^p} w^(2^p),   w = alpha_n^(j k)
//
// is GF(2)-linear in w. Writing w in a normal basis (gamma^(2^s))_s gives
// L(w) = sum_s a_s L(gamma^(2^s)), and the eleven values L(gamma^(2^s)) form
// one 11-point cyclic convolution of the conjugates of gamma with the
// (reordered) coset data. The transform is therefore
//
//   F = A * blockdiag(Q11) * (c . blockdiag(P11) f')
//
// where f' is the permuted input, c = R11 (gamma, gamma^2, ..., gamma^1024)
// is a fixed constant vector per coset and A holds the normal-basis
// coordinates a_s of every alpha_n^(j k).

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfft11/bilinear.hpp"
#include "cfft11/bit_matrix.hpp"
#include "cfft11/gf.hpp"

namespace cfft11 {

inline constexpr std::array<std::uint32_t, 4> kSupportedLengths = {1, 23, 89, 2047};

inline bool is_supported_length(std::uint64_t n) {
  for (auto s : kSupportedLengths) {
    if (s == n) return true;
  }
  return false;
}

inline void require_supported_length(std::uint64_t n) {
  if (!is_supported_length(n)) {
    throw std::invalid_argument("unsupported transform length " + std::to_string(n) +
                                " (must divide 2047: 1, 23, 89 or 2047)");
  }
}

struct Coset {
  std::uint32_t representative = 0;
  std::vector<std::uint32_t> members;  // representative * 2^p mod n, p = 0, 1, ...

  std::size_t size() const { return members.size(); }
  friend bool operator==(const Coset&, const Coset&) = default;
};

struct CosetTable {
  std::uint32_t n = 0;
  std::vector<Coset> cosets;  // sorted by (minimal) representative

  std::size_t count_of_size(std::size_t s) const {
    std::size_t c = 0;
    for (const auto& co : cosets) c += (co.size() == s);
    return c;
  }
  friend bool operator==(const CosetTable&, const CosetTable&) = default;
};

inline CosetTable cosets(std::uint32_t n) {
  require_supported_length(n);
  CosetTable t{n, {}};
  std::vector<bool> seen(n, false);
  for (std::uint32_t k = 0; k < n; ++k) {
    if (seen[k]) continue;
    Coset c{k, {}};
    std::uint32_t m = k;
    do {
      seen[m] = true;
      c.members.push_back(m);
      m = static_cast<std::uint32_t>((2ull * m) % n);
    } while (m != k);
    t.cosets.push_back(std::move(c));
  }
  return t;
}

struct NormalBasis {
  std::uint32_t exponent = 0;  // gamma = alpha^exponent
  Element gamma;
  std::array<Element, kDegree> conjugates{};  // gamma^(2^s)
  BitMatrix to_poly;    // column s = polynomial coordinates of conjugates[s]
  BitMatrix from_poly;  // inverse of to_poly

  // Coordinates a_s with e = sum_s a_s gamma^(2^s), packed as bit s.
  std::uint32_t decompose(Element e) const {
    return static_cast<std::uint32_t>(from_poly.apply_bits(e.value()));
  }
  Element recombine(std::uint32_t bits) const {
    Element acc{};
    for (unsigned s = 0; s < kDegree; ++s) {
      if ((bits >> s) & 1u) acc += conjugates[s];
    }
    return acc;
  }
};

inline NormalBasis normal_basis_for(const Field& field, std::uint32_t exponent) {
  NormalBasis nb;
  nb.exponent = exponent;
  nb.gamma = field.exp(exponent);
  BitMatrix to_poly(kDegree, kDegree);
  Element c = nb.gamma;
  for (unsigned s = 0; s < kDegree; ++s) {
    nb.conjugates[s] = c;
    for (unsigned b = 0; b < kDegree; ++b) {
      if ((c.value() >> b) & 1u) to_poly.set(b, s);
    }
    c = field.frobenius(c);
  }
  nb.to_poly = std::move(to_poly);
  return nb;
}

// Smallest t >= 1 such that the conjugates of alpha^t are linearly independent.
inline NormalBasis find_normal_basis(const Field& field) {
  for (std::uint32_t t = 1; t < kGroupOrder; ++t) {
    NormalBasis nb = normal_basis_for(field, t);
    if (auto inv = nb.to_poly.inverse()) {
      nb.from_poly = std::move(*inv);
      return nb;
    }
  }
  throw std::logic_error("no normal basis element found");
}

struct CfftPlan {
  std::uint32_t n = 0;
  std::uint32_t genpoly = kDefaultGenPoly;
  CosetTable cosets;
  std::uint32_t gamma_exponent = 0;
  // f'[i] = f[permutation[i]]
  std::vector<std::uint32_t> permutation;
  // One vector per coset: {1} for a size-1 coset, 43 values for a size-11 coset.
  std::vector<std::vector<Element>> constants;
  BitMatrix a_matrix;  // n x n
  std::uint64_t mult_count = 0;
  std::uint64_t add_count = 0;

  std::size_t constant_count() const {
    std::size_t c = 0;
    for (const auto& v : constants) c += v.size();
    return c;
  }
  friend bool operator==(const CfftPlan&, const CfftPlan&) = default;
};

struct Complexity {
  std::uint64_t mult = 0;
  std::uint64_t add_p = 0;  // P11 blocks on f'
  std::uint64_t add_q = 0;  // Q11 blocks
  std::uint64_t add_a = 0;  // A
  std::uint64_t add = 0;    // add_p + add_q + add_a
  // P11 blocks plus the single matrix A * blockdiag(Q11).
  std::uint64_t add_combined = 0;
};

inline Complexity complexity(const CfftPlan& plan) {
  const auto& conv = conv11_algorithm();
  Complexity c;
  for (const auto& block : plan.constants) {
    for (Element e : block) {
      if (e.value() > 1) ++c.mult;
    }
  }
  std::size_t big_blocks = 0;
  for (const auto& co : plan.cosets.cosets) big_blocks += (co.size() == kDegree);
  c.add_p = big_blocks * conv.p.xor_count();
  c.add_q = big_blocks * conv.q.xor_count();
  c.add_a = plan.a_matrix.xor_count();
  c.add = c.add_p + c.add_q + c.add_a;

  // Weight of a Q11 combination, indexed by the 11-bit row selection.
  std::vector<std::uint32_t> q_weight(1u << kDegree, 0);
  for (std::uint32_t mask = 1; mask < q_weight.size(); ++mask) {
    std::uint64_t acc = 0;
    for (unsigned s = 0; s < kDegree; ++s) {
      if ((mask >> s) & 1u) acc ^= conv.q.row_words(s)[0];
    }
    q_weight[mask] = static_cast<std::uint32_t>(std::popcount(acc));
  }
  std::uint64_t combined = 0;
  for (std::size_t j = 0; j < plan.a_matrix.rows(); ++j) {
    std::uint64_t ones = 0;
    std::size_t col = 0;
    for (const auto& co : plan.cosets.cosets) {
      if (co.size() == kDegree) {
        std::uint32_t mask = 0;
        for (unsigned s = 0; s < kDegree; ++s) mask |= plan.a_matrix.get(j, col + s) << s;
        ones += q_weight[mask];
      } else {
        ones += plan.a_matrix.get(j, col);
      }
      col += co.size();
    }
    if (ones > 1) combined += ones - 1;
  }
  c.add_combined = c.add_p + combined;
  return c;
}

inline CfftPlan build_plan(const Field& field, std::uint32_t n) {
  CfftPlan plan;
  plan.n = n;
  plan.genpoly = field.genpoly();
  plan.cosets = cosets(n);
  const NormalBasis nb = find_normal_basis(field);
  plan.gamma_exponent = nb.exponent;

  const auto& conv = conv11_algorithm();
  const std::vector<Element> block_constants =
      conv.r.apply(std::span<const Element>(nb.conjugates));

  // L(gamma^(2^s)) = sum_p f_{k 2^p} gamma^(2^(s+p)) is a correlation; feeding
  // the coset data in reversed order, g[p] = f_{k 2^(-p mod 11)}, turns it into
  // the cyclic convolution (g * conjugates)_s.
  for (const auto& co : plan.cosets.cosets) {
    if (co.size() == kDegree) {
      for (unsigned p = 0; p < kDegree; ++p) {
        plan.permutation.push_back(co.members[(kDegree - p) % kDegree]);
      }
      plan.constants.push_back(block_constants);
    } else if (co.size() == 1) {
      plan.permutation.push_back(co.members[0]);
      plan.constants.push_back({Field::one()});
    } else {
      throw std::logic_error("unexpected coset size " + std::to_string(co.size()));
    }
  }

  plan.a_matrix = BitMatrix(n, n);
  const std::uint64_t step = kGroupOrder / n;
  for (std::uint32_t j = 0; j < n; ++j) {
    std::size_t col = 0;
    for (const auto& co : plan.cosets.cosets) {
      if (co.size() == kDegree) {
        const Element w = field.exp(step * ((static_cast<std::uint64_t>(j) * co.representative) % n));
        const std::uint32_t bits = nb.decompose(w);
        for (unsigned s = 0; s < kDegree; ++s) {
          if ((bits >> s) & 1u) plan.a_matrix.set(j, col + s);
        }
      } else {
        // The zero coset evaluates to f_0 in the basis {1}.
        plan.a_matrix.set(j, col);
      }
      col += co.size();
    }
  }

  const Complexity c = complexity(plan);
  plan.mult_count = c.mult;
  plan.add_count = c.add;
  return plan;
}

inline void check_plan_input(const Field& field, const CfftPlan& plan, std::size_t len) {
  if (len != plan.n) {
    throw std::invalid_argument("input length " + std::to_string(len) +
                                " does not match plan length " + std::to_string(plan.n));
  }
  if (field.genpoly() != plan.genpoly) throw std::invalid_argument("plan built for another field");
}

// Output of the per-coset convolution stage: for each coset in table order,
// the values L(basis element) (eleven for a size-11 coset, f_0 for {0}).
inline std::vector<Element> coset_stage(const Field& field, const CfftPlan& plan,
                                        std::span<const Element> f) {
  check_plan_input(field, plan, f.size());
  const auto& conv = conv11_algorithm();
  std::vector<Element> mid(plan.n);
  std::size_t pos = 0;
  std::array<Element, kDegree> x{};
  std::array<Element, 43> prod{};
  for (std::size_t b = 0; b < plan.cosets.cosets.size(); ++b) {
    const auto& consts = plan.constants[b];
    if (plan.cosets.cosets[b].size() == 1) {
      mid[pos] = field.mul(consts[0], f[plan.permutation[pos]]);
      ++pos;
      continue;
    }
    for (unsigned p = 0; p < kDegree; ++p) x[p] = f[plan.permutation[pos + p]];
    for (std::size_t t = 0; t < prod.size(); ++t) {
      Element acc{};
      conv.p.for_each_one(t, [&](std::size_t j) { acc += x[j]; });
      prod[t] = field.mul(consts[t], acc);
    }
    for (unsigned s = 0; s < kDegree; ++s) {
      Element acc{};
      conv.q.for_each_one(s, [&](std::size_t t) { acc += prod[t]; });
      mid[pos + s] = acc;
    }
    pos += kDegree;
  }
  return mid;
}

// F_j = sum_i f_i alpha_n^(i j), alpha_n = alpha^(2047/n).
inline std::vector<Element> evaluate(const Field& field, const CfftPlan& plan,
                                     std::span<const Element> f) {
  const std::vector<Element> mid = coset_stage(field, plan, f);
  std::vector<Element> out(plan.n);
  for (std::size_t j = 0; j < plan.n; ++j) {
    Element acc{};
    plan.a_matrix.for_each_one(j, [&](std::size_t c) { acc += mid[c]; });
    out[j] = acc;
  }
  return out;
}

}  // namespace cfft11
