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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cfft11/cfft11.hpp"
#include "json.hpp"

namespace cfft11::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint32_t n = 23;
  bool n_given = false;
  std::string in;
  std::string out;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string name;

  bool json() const { return format == "json"; }
};

std::string hex(Element e) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%03X", static_cast<unsigned>(e.value()));
  return buf;
}

std::vector<Element> read_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Element> v;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(b, e - b + 1);
    unsigned value = 0;
    std::size_t used = 0;
    bool ok = tok.size() > 2 && tok.size() <= 5 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X');
    if (ok) {
      try {
        value = static_cast<unsigned>(std::stoul(tok.substr(2), &used, 16));
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok || used != tok.size() - 2 || value >= kFieldSize) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected 0x000-0x7FF, got '" +
                               tok + "'");
    }
    v.emplace_back(value);
  }
  return v;
}

std::string vector_text(std::span<const Element> v) {
  std::string s;
  for (Element e : v) s += hex(e) + "\n";
  return s;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void require_length(const Config& c) {
  if (!is_supported_length(c.n)) {
    throw UsageError("unsupported --n " + std::to_string(c.n) + " (expected 1, 23, 89 or 2047)");
  }
}

// Plan from --in when given, otherwise built for --n.
CfftPlan plan_from_config(const Config& c) {
  if (!c.in.empty()) {
    CfftPlan p = load_plan(c.in);
    if (c.n_given && p.n != c.n) {
      throw UsageError("--n " + std::to_string(c.n) + " does not match plan length " + std::to_string(p.n));
    }
    return p;
  }
  require_length(c);
  return build_plan(Field::standard(), c.n);
}

// ---------------------------------------------------------------------------

int cmd_cosets(const Config& c, std::ostream& out) {
  require_length(c);
  const CosetTable t = cosets(c.n);
  if (c.json()) {
    json j = {{"n", c.n}, {"count", t.cosets.size()}};
    json list = json::array();
    for (const auto& co : t.cosets) list.push_back({{"representative", co.representative}, {"members", co.members}});
    j["cosets"] = std::move(list);
    out << j.dump(1) << '\n';
    return kExitOk;
  }
  std::vector<std::size_t> sizes;
  for (const auto& co : t.cosets) sizes.push_back(co.size());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  out << t.cosets.size() << (t.cosets.size() == 1 ? " coset: " : " cosets: ");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    out << (i ? ", " : "") << t.count_of_size(sizes[i]) << "×size-" << sizes[i];
  }
  out << '\n';
  for (const auto& co : t.cosets) {
    out << "C" << co.representative << ":";
    for (auto m : co.members) out << ' ' << m;
    out << '\n';
  }
  return kExitOk;
}

int cmd_plan(const Config& c, std::ostream& out) {
  require_length(c);
  if (c.out.empty()) throw UsageError("plan needs --out");
  const CfftPlan p = build_plan(Field::standard(), c.n);
  save_plan(p, c.out);
  if (c.json()) {
    out << json{{"n", p.n}, {"path", c.out}, {"mult", p.mult_count}, {"add", p.add_count},
                {"constants", p.constant_count()}, {"gamma_exponent", p.gamma_exponent}}
               .dump(1)
        << '\n';
  } else {
    out << "wrote " << c.out << ": n = " << p.n << ", constants = " << p.constant_count()
        << ", mult = " << p.mult_count << ", add = " << p.add_count << '\n';
  }
  return kExitOk;
}

int cmd_eval(const Config& c, std::ostream& out) {
  if (c.in.empty()) throw UsageError("eval needs --in <vector file>");
  require_length(c);
  const auto f = read_vector(c.in);
  if (f.size() != c.n) {
    throw UsageError(c.in + " holds " + std::to_string(f.size()) + " elements, expected " + std::to_string(c.n));
  }
  const Field& field = Field::standard();
  const auto result = evaluate(field, build_plan(field, c.n), f);
  std::string text;
  if (c.json()) {
    json arr = json::array();
    for (Element e : result) arr.push_back(hex(e));
    text = json{{"n", c.n}, {"output", arr}}.dump(1) + "\n";
  } else {
    text = vector_text(result);
  }
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;
};

std::string describe(const std::vector<Element>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + hex(v[i]);
  return s + ")";
}

std::optional<std::size_t> first_mismatch(std::span<const Element> a, std::span<const Element> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}
  std::vector<Element> elements(std::size_t n) {
    std::vector<Element> v(n);
    for (auto& e : v) e = Element{static_cast<unsigned>(gen_() % kFieldSize)};
    return v;
  }
  std::vector<aft::Int> integers(std::size_t n, aft::Int bound) {
    std::uniform_int_distribution<aft::Int> d(-bound, bound);
    std::vector<aft::Int> v(n);
    for (auto& x : v) x = d(gen_);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

std::vector<Element> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Element> v(n);
  v[i] = Element{1};
  return v;
}

SuiteResult verify_conv11(const Field& f, std::size_t trials, Random& rng) {
  SuiteResult r{"conv11", true, 0, {}};
  auto check = [&](const std::vector<Element>& x, const std::vector<Element>& y) {
    MulCounter mc;
    const auto got = conv11_apply(f, x, y, &mc);
    const auto want = oracle::naive_cyclic_conv(f.genpoly(), x, y);
    ++r.checks;
    if (auto i = first_mismatch(got, want)) {
      r.detail = "output " + std::to_string(*i) + " differs for x=" + describe(x) + " y=" + describe(y);
      return false;
    }
    if (mc.multiplications != 43) {
      r.detail = std::to_string(mc.multiplications) + " multiplications instead of 43";
      return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < 11 && r.ok; ++i) {
    for (std::size_t j = 0; j < 11 && r.ok; ++j) r.ok = check(unit_vector(11, i), unit_vector(11, j));
  }
  for (std::size_t t = 0; t < trials && r.ok; ++t) {
    const auto x = rng.elements(11);
    r.ok = check(x, rng.elements(11));
  }
  return r;
}

SuiteResult verify_toeplitz(const Field& f, std::size_t k, std::size_t trials, Random& rng) {
  SuiteResult r{k == 5 ? "t5" : "t10", true, 0, {}};
  const std::size_t want_mults = k == 5 ? 14 : 42;
  auto check = [&](const std::vector<Element>& rv, const std::vector<Element>& u) {
    MulCounter mc;
    const auto got = k == 5 ? t5_apply(f, rv, u, &mc) : t10_apply(f, rv, u, &mc);
    const auto want = oracle::naive_toeplitz(f.genpoly(), rv, u);
    ++r.checks;
    if (auto i = first_mismatch(got, want)) {
      r.detail = "output " + std::to_string(*i) + " differs for r=" + describe(rv) + " u=" + describe(u);
      return false;
    }
    if (mc.multiplications != want_mults) {
      r.detail = std::to_string(mc.multiplications) + " multiplications instead of " + std::to_string(want_mults);
      return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < 2 * k - 1 && r.ok; ++i) {
    for (std::size_t j = 0; j < k && r.ok; ++j) r.ok = check(unit_vector(2 * k - 1, i), unit_vector(k, j));
  }
  for (std::size_t t = 0; t < trials && r.ok; ++t) {
    const auto rv = rng.elements(2 * k - 1);
    r.ok = check(rv, rng.elements(k));
  }
  return r;
}

SuiteResult verify_aft(std::size_t trials, Random& rng) {
  SuiteResult r{"aft-int", true, 0, {}};
  auto check_reduction = [&](const std::vector<aft::Int>& yp) {
    ++r.checks;
    if (!aft::verify_toeplitz_reduction(yp)) {
      r.detail = "Toeplitz reduction fails";
      return false;
    }
    return true;
  };
  auto check_conv = [&](const std::vector<aft::Int>& x, const std::vector<aft::Int>& y) {
    ++r.checks;
    const auto got = aft::conv11_int(x, y);
    const auto want = oracle::naive_cyclic_conv(std::span<const aft::Int>(x), std::span<const aft::Int>(y));
    if (!std::equal(got.begin(), got.end(), want.begin())) {
      r.detail = "integer convolution differs from the naive product";
      return false;
    }
    return true;
  };
  try {
    for (std::size_t i = 0; i < 10 && r.ok; ++i) {
      std::vector<aft::Int> yp(10, 0);
      yp[i] = 1;
      r.ok = check_reduction(yp);
    }
    for (std::size_t i = 0; i < 11 && r.ok; ++i) {
      for (std::size_t j = 0; j < 11 && r.ok; ++j) {
        std::vector<aft::Int> x(11, 0), y(11, 0);
        x[i] = 1;
        y[j] = 1;
        r.ok = check_conv(x, y);
      }
    }
    for (std::size_t t = 0; t < trials && r.ok; ++t) {
      r.ok = check_reduction(rng.integers(10, 1000000));
      if (r.ok) {
        const auto x = rng.integers(11, 100000);
        r.ok = check_conv(x, rng.integers(11, 100000));
      }
    }
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = e.what();
  }
  return r;
}

SuiteResult verify_cfft(const Field& f, const CfftPlan& plan, std::size_t trials, Random& rng) {
  SuiteResult r{"cfft n=" + std::to_string(plan.n), true, 0, {}};
  const std::size_t units = plan.n <= 89 ? plan.n : 20;
  auto check = [&](const std::vector<Element>& x, const std::string& label) {
    ++r.checks;
    const auto got = evaluate(f, plan, x);
    const auto want = oracle::naive_dft(f.genpoly(), x);
    if (auto i = first_mismatch(got, want)) {
      r.detail = "first mismatching output index " + std::to_string(*i) + " (" + label + ")";
      return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < units && r.ok; ++i) r.ok = check(unit_vector(plan.n, i), "unit " + std::to_string(i));
  for (std::size_t t = 0; t < trials && r.ok; ++t) r.ok = check(rng.elements(plan.n), "random trial " + std::to_string(t));
  return r;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const Field& field = Field::standard();
  const CfftPlan plan = plan_from_config(c);
  if (plan.genpoly != field.genpoly()) throw UsageError("plan uses an unsupported field polynomial");
  Random rng(c.seed);
  std::vector<SuiteResult> results;
  results.push_back(verify_conv11(field, c.trials, rng));
  results.push_back(verify_toeplitz(field, 5, c.trials, rng));
  results.push_back(verify_toeplitz(field, 10, c.trials, rng));
  results.push_back(verify_aft(c.trials, rng));
  results.push_back(verify_cfft(field, plan, c.trials, rng));
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok; });
  if (c.json()) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back({{"suite", r.name}, {"pass", r.ok}, {"checks", r.checks}, {"detail", r.detail}});
    out << json{{"pass", ok}, {"seed", c.seed}, {"trials", c.trials}, {"suites", arr}}.dump(1) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.ok ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
      if (!r.ok) out << ": " << r.detail;
      out << '\n';
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------

int cmd_complexity(const Config& c, std::ostream& out) {
  const CfftPlan plan = plan_from_config(c);
  const Complexity cx = complexity(plan);
  const Slp slp = compile(plan);
  const CseOptions opts = default_cse_options(slp);
  const Slp opt = greedy_cse(slp, opts);
  const std::size_t cse_xors = op_counts(opt).xors;
  if (c.json()) {
    out << json{{"n", plan.n},
                {"mult", cx.mult},
                {"add_direct", cx.add},
                {"add_p", cx.add_p},
                {"add_q", cx.add_q},
                {"add_a", cx.add_a},
                {"add_combined", cx.add_combined},
                {"add_cse", cse_xors},
                {"cse_max_extractions", opts.max_extractions},
                {"cse_max_rounds", opts.max_rounds}}
               .dump(1)
        << '\n';
    return kExitOk;
  }
  out << "n = " << plan.n << '\n'
      << "mult = " << cx.mult << '\n'
      << "add(direct) = " << cx.add << "  [P " << cx.add_p << ", Q " << cx.add_q << ", A " << cx.add_a << "]\n"
      << "add(combined) = " << cx.add_combined << '\n'
      << "add(cse) = " << cse_xors;
  if (opts.max_extractions) {
    out << "  [budget " << opts.max_extractions << " extractions, " << opts.max_rounds << " round]";
  }
  out << '\n';
  return kExitOk;
}

double median_seconds(std::size_t runs, const std::function<void()>& fn) {
  std::vector<double> t;
  for (std::size_t i = 0; i < runs; ++i) {
    const auto a = std::chrono::steady_clock::now();
    fn();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - a).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

int cmd_bench(const Config& c, std::ostream& out) {
  require_length(c);
  const Field& field = Field::standard();
  const CfftPlan plan = build_plan(field, c.n);
  const Slp slp = compile(plan);
  const std::size_t runs = std::max<std::size_t>(c.trials, 1);
  Random rng(c.seed);
  const auto f = rng.elements(c.n);
  std::vector<Element> a, b, d;
  const double t_plan = median_seconds(runs, [&] { a = evaluate(field, plan, f); });
  const double t_slp = median_seconds(runs, [&] { b = run(slp, field, f); });
  const double t_naive = median_seconds(runs, [&] { d = oracle::naive_dft(field.genpoly(), f); });
  if (a != d || b != d) throw std::logic_error("bench: transform outputs disagree");
  if (c.json()) {
    out << json{{"n", c.n}, {"runs", runs}, {"plan_s", t_plan}, {"slp_s", t_slp}, {"naive_s", t_naive}}.dump(1)
        << '\n';
  } else {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "n = %u, median of %zu runs\nplan eval  %.6f s\nslp run    %.6f s\nnaive dft  %.6f s\n",
                  c.n, runs, t_plan, t_slp, t_naive);
    out << buf;
  }
  return kExitOk;
}

int cmd_dump(const Config& c, std::ostream& out) {
  const auto m = named_matrix(c.name);
  if (!m) {
    std::string names;
    for (const auto& n : matrix_names()) names += " " + n;
    throw UsageError("unknown matrix '" + c.name + "'; known:" + names);
  }
  if (c.json()) {
    json rows = json::array();
    for (std::size_t i = 0; i < m->rows(); ++i) rows.push_back(m->row_string(i));
    out << json{{"name", c.name}, {"rows", m->rows()}, {"cols", m->cols()}, {"data", rows}}.dump(1) << '\n';
  } else {
    out << m->to_text();
  }
  return kExitOk;
}

Slp program_from_config(const Config& c) {
  if (!c.in.empty() && c.in.ends_with(".json")) return compile(plan_from_config(c));
  if (!c.in.empty()) return parse_slp(read_file(c.in));
  require_length(c);
  return compile(build_plan(Field::standard(), c.n));
}

int cmd_emit(const Config& c, std::ostream& out) {
  const std::string text = to_text(program_from_config(c));
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
  return kExitOk;
}

int cmd_cse(const Config& c, std::ostream& out) {
  const Slp slp = program_from_config(c);
  const CseOptions opts = default_cse_options(slp);
  const Slp opt = greedy_cse(slp, opts);
  const OpCounts before = op_counts(slp), after = op_counts(opt);
  if (!c.out.empty()) write_file(c.out, to_text(opt));
  if (c.json()) {
    out << json{{"xor_before", before.xors}, {"xor_after", after.xors}, {"cmul", after.cmuls},
                {"max_extractions", opts.max_extractions}, {"max_rounds", opts.max_rounds}}
               .dump(1)
        << '\n';
  } else {
    out << "xor " << before.xors << " -> " << after.xors << ", cmul " << after.cmuls << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclotomic FFT plans over GF(2^11) built on an 11-point cyclic convolution", "cfft11"};
  app.require_subcommand(1);
  Config c;

  auto add_n = [&](CLI::App* s) {
    s->add_option_function<std::uint32_t>("--n", [&](std::uint32_t v) { c.n = v; c.n_given = true; },
                                          "transform length: 1, 23, 89 or 2047 (default 23)");
  };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* cosets_cmd = app.add_subcommand("cosets", "list cyclotomic cosets of 2 modulo n");
  add_n(cosets_cmd);
  add_format(cosets_cmd);

  auto* plan_cmd = app.add_subcommand("plan", "build a plan and write it as JSON");
  add_n(plan_cmd);
  plan_cmd->add_option("--out", c.out, "plan file to write")->required();
  add_format(plan_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate the DFT of a hex vector file");
  add_n(eval_cmd);
  eval_cmd->add_option("--in", c.in, "input vector, one 0x000-0x7FF value per line")->required();
  eval_cmd->add_option("--out", c.out, "output file (default: stdout)");
  add_format(eval_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check every algorithm against the naive references");
  add_n(verify_cmd);
  verify_cmd->add_option("--in", c.in, "plan file to verify instead of a freshly built plan");
  verify_cmd->add_option("--trials", c.trials, "random trials per suite (default 100)");
  verify_cmd->add_option("--seed", c.seed, "random seed (default 0)");
  add_format(verify_cmd);

  auto* complexity_cmd = app.add_subcommand("complexity", "report multiplication and addition counts");
  add_n(complexity_cmd);
  complexity_cmd->add_option("--in", c.in, "plan file");
  add_format(complexity_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "time plan evaluation against the naive DFT");
  add_n(bench_cmd);
  bench_cmd->add_option("--trials", c.trials, "timed runs (median reported)");
  bench_cmd->add_option("--seed", c.seed, "random seed for the input vector (default 0)");
  add_format(bench_cmd);

  auto* dump_cmd = app.add_subcommand("dump", "print a named bit matrix");
  dump_cmd->add_option("name", c.name, "T, S, Pi0..Pi5, PT5, RT5, QT5, P11, R11 or Q11")->required();
  add_format(dump_cmd);

  auto* cse_cmd = app.add_subcommand("cse", "run greedy common subexpression elimination");
  add_n(cse_cmd);
  cse_cmd->add_option("--in", c.in, "program text, or a .json plan file");
  cse_cmd->add_option("--out", c.out, "write the optimized program here");
  add_format(cse_cmd);

  auto* emit_cmd = app.add_subcommand("emit", "write the straight-line program of a plan");
  add_n(emit_cmd);
  emit_cmd->add_option("--in", c.in, "plan file (.json) or program text");
  emit_cmd->add_option("--out", c.out, "output file (default: stdout)");

  bool bench_trials_given = false;
  try {
    app.parse(argc, argv);
    bench_trials_given = bench_cmd->count("--trials") > 0;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*cosets_cmd) return cmd_cosets(c, out);
    if (*plan_cmd) return cmd_plan(c, out);
    if (*eval_cmd) return cmd_eval(c, out);
    if (*verify_cmd) return cmd_verify(c, out);
    if (*complexity_cmd) return cmd_complexity(c, out);
    if (*bench_cmd) {
      if (!bench_trials_given) c.trials = 5;
      return cmd_bench(c, out);
    }
    if (*dump_cmd) return cmd_dump(c, out);
    if (*cse_cmd) return cmd_cse(c, out);
    if (*emit_cmd) return cmd_emit(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cfft11::cli
