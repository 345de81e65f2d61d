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

// JSON form of a CfftPlan. Constants are stored as integers in the
// polynomial basis and the decomposition matrix as one '0'/'1' string per row.
// Loading checks shapes only; a structurally valid but numerically wrong plan
// loads fine and is caught by verification against the naive DFT.

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cfft11/cfft.hpp"

namespace cfft11 {

inline constexpr const char* kPlanFormat = "cfft11-plan";
inline constexpr int kPlanVersion = 1;

inline nlohmann::json plan_to_json(const CfftPlan& plan) {
  using nlohmann::json;
  json j;
  j["format"] = kPlanFormat;
  j["version"] = kPlanVersion;
  j["field"] = {{"m", kDegree}, {"genpoly", plan.genpoly}};
  j["n"] = plan.n;
  j["gamma_exponent"] = plan.gamma_exponent;
  json cos = json::array();
  for (const auto& c : plan.cosets.cosets) {
    cos.push_back({{"representative", c.representative}, {"members", c.members}});
  }
  j["cosets"] = std::move(cos);
  j["permutation"] = plan.permutation;
  json consts = json::array();
  for (const auto& block : plan.constants) {
    json b = json::array();
    for (Element e : block) b.push_back(e.value());
    consts.push_back(std::move(b));
  }
  j["constants"] = std::move(consts);
  json rows = json::array();
  for (std::size_t i = 0; i < plan.a_matrix.rows(); ++i) rows.push_back(plan.a_matrix.row_string(i));
  j["a_matrix"] = std::move(rows);
  j["counts"] = {{"mult", plan.mult_count}, {"add", plan.add_count}};
  return j;
}

inline CfftPlan plan_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& what) -> void {
    throw std::runtime_error("invalid plan document: " + what);
  };
  if (j.value("format", std::string{}) != kPlanFormat) fail("format tag");
  if (j.value("version", 0) != kPlanVersion) fail("unsupported version");
  if (j.at("field").at("m").get<unsigned>() != kDegree) fail("field degree must be 11");

  CfftPlan plan;
  plan.genpoly = j.at("field").at("genpoly").get<std::uint32_t>();
  plan.n = j.at("n").get<std::uint32_t>();
  if (!is_supported_length(plan.n)) fail("unsupported n");
  plan.gamma_exponent = j.at("gamma_exponent").get<std::uint32_t>();
  plan.cosets.n = plan.n;
  for (const auto& c : j.at("cosets")) {
    plan.cosets.cosets.push_back(
        {c.at("representative").get<std::uint32_t>(),
         c.at("members").get<std::vector<std::uint32_t>>()});
  }
  plan.permutation = j.at("permutation").get<std::vector<std::uint32_t>>();
  for (const auto& b : j.at("constants")) {
    std::vector<Element> block;
    for (const auto& v : b) {
      const auto x = v.get<std::uint32_t>();
      if (x >= kFieldSize) fail("constant out of range");
      block.emplace_back(x);
    }
    plan.constants.push_back(std::move(block));
  }
  const auto rows = j.at("a_matrix").get<std::vector<std::string>>();
  std::vector<std::string_view> views(rows.begin(), rows.end());
  plan.a_matrix = BitMatrix::from_rows(std::span<const std::string_view>(views));
  plan.mult_count = j.at("counts").at("mult").get<std::uint64_t>();
  plan.add_count = j.at("counts").at("add").get<std::uint64_t>();

  // Shape checks.
  if (plan.permutation.size() != plan.n) fail("permutation length");
  std::vector<bool> hit(plan.n, false);
  for (auto p : plan.permutation) {
    if (p >= plan.n || hit[p]) fail("permutation is not a bijection");
    hit[p] = true;
  }
  if (plan.constants.size() != plan.cosets.cosets.size()) fail("constants/coset count mismatch");
  std::size_t total = 0;
  for (std::size_t i = 0; i < plan.cosets.cosets.size(); ++i) {
    const std::size_t sz = plan.cosets.cosets[i].size();
    total += sz;
    const std::size_t want = sz == kDegree ? conv11_algorithm().multiplications() : 1;
    if ((sz != 1 && sz != kDegree) || plan.constants[i].size() != want) fail("constant block shape");
  }
  if (total != plan.n) fail("cosets do not cover n");
  if (plan.a_matrix.rows() != plan.n || plan.a_matrix.cols() != plan.n) fail("a_matrix shape");
  return plan;
}

inline void save_plan(const CfftPlan& plan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << plan_to_json(plan).dump(1) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline CfftPlan load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("plan parse error: ") + e.what());
  }
  try {
    return plan_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid plan document: ") + e.what());
  }
}

}  // namespace cfft11
