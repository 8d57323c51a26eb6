// Copyright 2026 The ddlab Authors
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

// ddlab: command-line front end for the distinct-distances toolkit.

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddlab/bounds.hpp"
#include "ddlab/config.hpp"
#include "ddlab/configs.hpp"
#include "ddlab/energy.hpp"
#include "ddlab/error.hpp"
#include "ddlab/io.hpp"
#include "ddlab/oracle.hpp"
#include "ddlab/reduction.hpp"
#include "ddlab/sweep.hpp"

namespace {

using namespace ddlab;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

// Largest Gamma for which verify checks every pair of curves.
constexpr std::size_t kVerifyPairwiseCurves = 400;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

LogConvention parse_log(const std::string& s) {
  if (s == "ln-clamped") return LogConvention::kLnClamped;
  if (s == "log2-clamped") return LogConvention::kLog2Clamped;
  throw InputError("unknown log convention '" + s + "'");
}

Generator parse_gen(const std::string& s) {
  auto g = parse_generator(s);
  if (!g) throw InputError("unknown generator '" + s + "'");
  return *g;
}

Config require_config(const Input& in, const char* what) {
  if (const auto* cfg = std::get_if<Config>(&in)) return *cfg;
  throw InputError(std::string(what) +
                   " needs a coordinate config, not a squared-distance matrix");
}

DistanceClasses classes_of(const Input& in) {
  return std::visit([](const auto& v) { return distance_classes(v); }, in);
}

struct GenOptions {
  std::string generator = "random";
  std::size_t n = 8;
  std::size_t m = 8;
  int k = 2;
  int c = 1;
  std::uint64_t seed = 1;
  std::int64_t range = 0;
  std::string h = "1";
  std::string output;
};

int run_gen(const GenOptions& o) {
  Sink sink(o.output);
  switch (parse_gen(o.generator)) {
    case Generator::kRandom: {
      RandomSpec spec{o.n, o.m, o.k, o.seed,
                      o.range > 0 ? o.range : static_cast<std::int64_t>(o.n + o.m), o.c};
      write_config(sink.out(), gen_random(spec));
      break;
    }
    case Generator::kCylinder:
      write_config(sink.out(), gen_cylinder_extremal(o.n, o.m, Rational::parse(o.h)));
      break;
    case Generator::kOrthogonal:
      write_matrix(sink.out(), gen_orthogonal_extremal(o.n, o.m));
      break;
  }
  return kExitOk;
}

struct IoOptions {
  std::string input;
  std::string output;
  bool json = false;
  std::string mode = "hash";
};

void print_energy_text(std::ostream& out, const EnergyReport& e) {
  out << "n=" << e.n << " m=" << e.m << " x=" << e.x << " Q=" << e.q
      << " Q0=" << e.q0 << " Q1=" << e.q1 << "\n";
  out << "histogram (class size: count):";
  for (const auto& [size, count] : e.histogram) out << " " << size << ":" << count;
  out << "\n";
}

int run_stats(const IoOptions& o) {
  const Input in = read_input_file(o.input);
  const EnergyReport e = energy(classes_of(in));
  Sink sink(o.output);
  if (o.json) {
    sink.out() << to_json(e) << "\n";
  } else {
    print_energy_text(sink.out(), e);
  }
  return kExitOk;
}

int run_reduce(const IoOptions& o) {
  const Config cfg = require_config(read_input_file(o.input), "reduce");
  if (!validate_constraints(cfg, 1).ok()) {
    throw InputError("reduce needs a configuration valid at c = 1 (run prune first)");
  }
  IncidenceMode mode;
  if (o.mode == "hash") {
    mode = IncidenceMode::kHashJoin;
  } else if (o.mode == "naive") {
    mode = IncidenceMode::kNaive;
  } else {
    throw InputError("unknown incidence mode '" + o.mode + "'");
  }
  const GammaSet gamma = build_gamma(cfg);
  const IncidenceReport inc = incidences(GridPi(cfg), gamma, mode);
  if (!o.output.empty()) {
    Sink sink(o.output);
    write_gamma_csv(sink.out(), gamma);
  }
  if (o.json) {
    std::cout << to_json(inc) << "\n";
  } else {
    std::cout << "curves=" << gamma.curves.size() << " pos=" << gamma.positive()
              << " neg=" << gamma.negative() << "\n"
              << "I=" << inc.total << " I_pos=" << inc.positive
              << " I_neg=" << inc.negative << "\n";
  }
  return kExitOk;
}

class CheckLog {
 public:
  void record(const std::string& name, bool ok, const std::string& detail) {
    all_ok_ = all_ok_ && ok;
    lines_.push_back({name, ok ? "PASS" : "FAIL", detail});
  }
  void skip(const std::string& name, const std::string& why) {
    lines_.push_back({name, "SKIP", why});
  }
  bool ok() const { return all_ok_; }

  void print(std::ostream& out, bool json) const {
    if (json) {
      out << "{\"ok\":" << (all_ok_ ? "true" : "false") << ",\"checks\":[";
      for (std::size_t i = 0; i < lines_.size(); ++i) {
        const auto& l = lines_[i];
        out << (i ? "," : "") << "{\"name\":\"" << l.name << "\",\"status\":\""
            << l.status << "\",\"detail\":\"" << escape(l.detail) << "\"}";
      }
      out << "]}\n";
      return;
    }
    for (const auto& l : lines_) {
      out << l.status << " " << l.name;
      if (!l.detail.empty()) out << "  " << l.detail;
      out << "\n";
    }
  }

 private:
  struct Line {
    std::string name;
    std::string status;
    std::string detail;
  };
  static std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out;
  }
  std::vector<Line> lines_;
  bool all_ok_ = true;
};

void verify_reduction(const Config& cfg, CheckLog& log) {
  const std::size_t m = cfg.m();
  GammaSet gamma;
  try {
    gamma = build_gamma(cfg);
  } catch (const Error& e) {
    log.record("gamma.build", false, e.what());
    return;
  }
  std::size_t distinct_triples = 0;
  {
    std::vector<std::tuple<Rational, Rational, Rational>> triples;
    bool none_zero = true;
    for (const auto& h : gamma.curves) {
      triples.emplace_back(h.alpha, h.beta, h.gamma);
      none_zero = none_zero && !h.gamma.is_zero();
    }
    std::sort(triples.begin(), triples.end());
    distinct_triples =
        std::unique(triples.begin(), triples.end()) - triples.begin();
    log.record("gamma.nondegenerate", none_zero, "");
  }
  const std::size_t want = m * (m - 1);
  log.record("gamma.size_and_distinct",
             gamma.curves.size() == want && distinct_triples == want,
             std::to_string(distinct_triples) + " distinct of " + std::to_string(want));
  log.record("gamma.sign_balance",
             gamma.positive() == want / 2 && gamma.negative() == want / 2,
             "pos=" + std::to_string(gamma.positive()) +
                 " neg=" + std::to_string(gamma.negative()));

  try {
    const BijectionReport b = verify_bijection(cfg);
    log.record("bijection.q1_eq_incidences", b.q1 == b.incidences,
               "Q1=" + std::to_string(b.q1) + " I=" + std::to_string(b.incidences) +
                   (b.audited ? " (pairing audited)" : ""));
  } catch (const Error& e) {
    log.record("bijection.q1_eq_incidences", false, e.what());
  }

  const GridPi grid(cfg);
  const IncidenceReport fast = incidences(grid, gamma);
  try {
    const std::uint64_t slow = oracle_incidences(grid, gamma);
    log.record("incidences.oracle", slow == fast.total,
               "hash=" + std::to_string(fast.total) + " oracle=" + std::to_string(slow));
  } catch (const Error& e) {
    log.skip("incidences.oracle", e.what());
  }

  std::uint64_t branch_total = 0;
  for (const auto& inc : list_incidences(grid, gamma)) {
    const Hyperbola& h = gamma.curves[inc.curve];
    const auto& s = grid.params[inc.s];
    const auto& t = grid.params[inc.t];
    (void)(h.gamma.sign() > 0 ? classify_branch(s, t, h) : classify_branch_lr(s, t, h));
    ++branch_total;
  }
  log.record("branches.partition", branch_total == fast.total,
             std::to_string(branch_total) + " classified");

  if (gamma.curves.size() <= kVerifyPairwiseCurves) {
    int worst = 0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < gamma.curves.size(); ++i) {
      for (std::size_t j = i + 1; j < gamma.curves.size(); ++j) {
        worst = std::max(worst, intersection_count(gamma.curves[i], gamma.curves[j]).count);
        ++pairs;
      }
    }
    log.record("curves.at_most_two_intersections", worst <= 2,
               std::to_string(pairs) + " pairs, max " + std::to_string(worst));
  } else {
    log.skip("curves.at_most_two_intersections",
             "more than " + std::to_string(kVerifyPairwiseCurves) + " curves");
  }
}

int run_verify(const IoOptions& o) {
  const Input in = read_input_file(o.input);
  CheckLog log;

  const DistanceClasses classes = classes_of(in);
  const EnergyReport e = energy(classes);
  const ChainReport chain = check_chain(e, classes.n(), classes.m());
  log.record("energy.q_split", e.q == e.q0 + e.q1, "");
  try {
    const QuadrupleCounts oq =
        std::visit([](const auto& v) { return oracle_quadruples(v); }, in);
    log.record("energy.oracle", oq.q == e.q && oq.q0 == e.q0 && oq.q1 == e.q1,
               "Q=" + std::to_string(e.q) + " oracle=" + std::to_string(oq.q));
  } catch (const Error& err) {
    log.skip("energy.oracle", err.what());
  }
  log.record("energy.q0_le_nm", chain.q0_within_nm, "Q0=" + std::to_string(e.q0));
  log.record("chain.cauchy_schwarz", chain.cauchy_schwarz, "slack=" + chain.slack.get_str());
  switch (chain.lower_bound) {
    case LowerBoundStatus::kHolds: log.record("chain.lower_bound", true, ""); break;
    case LowerBoundStatus::kFails: log.record("chain.lower_bound", false, ""); break;
    case LowerBoundStatus::kNotApplicable: log.skip("chain.lower_bound", "x > nm/2"); break;
    case LowerBoundStatus::kDivisionGuard: log.skip("chain.lower_bound", "Q = 0"); break;
  }

  if (const auto* cfg = std::get_if<Config>(&in)) {
    const ValidationReport own = validate_constraints(*cfg);
    log.record("config.constraints_at_c", own.ok(),
               "c=" + std::to_string(cfg->c()) + ", " +
                   std::to_string(own.violations.size()) + " violations");
    const ValidationReport strict = validate_constraints(*cfg, 1);
    if (cfg->m() < 2) {
      log.skip("reduction", "m < 2");
    } else if (strict.ok()) {
      verify_reduction(*cfg, log);
    } else if (!strict.cylinder_ok()) {
      bool raised = false;
      try {
        build_gamma(*cfg);
      } catch (const Error& err) {
        raised = err.code() == ErrorCode::kDegenerateHyperbola;
      }
      log.record("gamma.degenerate_detected", raised, "shared rho^2 in P2");
    } else {
      log.skip("reduction", "config violates c = 1 on p1");
    }
  } else {
    log.skip("reduction", "squared-distance matrix input");
  }

  log.print(std::cout, o.json);
  return log.ok() ? kExitOk : kExitCheckFailed;
}

struct BoundOptions {
  std::uint64_t n = 1;
  std::uint64_t m = 1;
  std::string log = "ln-clamped";
  bool json = false;
};

int run_bound(const BoundOptions& o) {
  if (o.n == 0 || o.m == 0) throw InputError("n and m must be >= 1");
  const LogConvention conv = parse_log(o.log);
  const BoundReport r = theorem1_bound(o.n, o.m, conv);
  if (o.json) {
    std::cout << to_json(r) << "\n";
  } else {
    std::cout << "n=" << r.n << " m=" << r.m << " regime=" << to_string(r.regime)
              << "\nm2=" << r.terms.m2 << " n23m23=" << r.terms.n23m23
              << " logterm=" << r.terms.logterm << " n2=" << r.terms.n2
              << "\nmin=" << r.min_value << " piecewise=" << r.piecewise_value
              << "\nagarwal(n^2, m(m-1))=" << agarwal_bound(o.n * o.n, o.m * (o.m > 1 ? o.m - 1 : 1), conv)
              << " q_upper=" << q_upper_expr(o.n, o.m, conv) << "\n";
  }
  return kExitOk;
}

struct SweepOptions {
  std::vector<std::size_t> n_list{8};
  std::vector<std::size_t> m_list{8};
  std::vector<std::uint64_t> seeds{1};
  int k = 2;
  int c = 1;
  std::string generator = "random";
  std::string log = "ln-clamped";
  std::string output;
};

int run_sweep_cmd(const SweepOptions& o) {
  SweepSpec spec;
  spec.n_list = o.n_list;
  spec.m_list = o.m_list;
  spec.seeds = o.seeds;
  spec.k = o.k;
  spec.c = o.c;
  spec.generator = parse_gen(o.generator);
  spec.log = parse_log(o.log);
  spec.workers = default_workers();
  const auto rows = compute_sweep(spec);
  Sink sink(o.output);
  write_sweep_csv(sink.out(), rows);
  for (const auto& r : rows) {
    if (r.error.empty() && !(r.chain_ok && r.q0_ok && r.bijection_ok)) {
      return kExitCheckFailed;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ddlab: exact distinct-distance counting between a collinear set "
               "and a point set in R^k"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 all checks pass, 1 an exact identity failed, 2 input error.\n"
      "DDLAB_THREADS caps the worker count.");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a Config or SqDistMatrix file");
  gen_cmd->add_option("--generator", gen.generator, "random | cylinder | orthogonal")
      ->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "P1 size")->capture_default_str();
  gen_cmd->add_option("--m", gen.m, "P2 size")->capture_default_str();
  gen_cmd->add_option("--k", gen.k, "dimension (random)")->capture_default_str();
  gen_cmd->add_option("--c", gen.c, "multiplicity bound (random)")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "mt19937_64 seed (random)")->capture_default_str();
  gen_cmd->add_option("--range", gen.range, "coordinate range, default n+m (random)");
  gen_cmd->add_option("--height", gen.h, "offset of the parallel line (cylinder)")
      ->capture_default_str();
  gen_cmd->add_option("--output", gen.output, "output file (default stdout)");

  IoOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Distinct count x and energy Q, Q0, Q1");
  stats_cmd->add_option("--input", stats.input, "Config or SqDistMatrix file")->required();
  stats_cmd->add_option("--output", stats.output, "output file (default stdout)");
  stats_cmd->add_flag("--json", stats.json, "emit JSON");

  IoOptions reduce;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "Build the hyperbola set and count grid incidences");
  reduce_cmd->add_option("--input", reduce.input, "Config file valid at c = 1")->required();
  reduce_cmd->add_option("--output", reduce.output,
                         "write curves as p_idx,q_idx,alpha,beta,gamma");
  reduce_cmd->add_option("--mode", reduce.mode, "hash | naive")->capture_default_str();
  reduce_cmd->add_flag("--json", reduce.json, "emit the incidence report as JSON");

  IoOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check every exact identity; exit 0/1");
  verify_cmd->add_option("--input", verify.input, "Config or SqDistMatrix file")->required();
  verify_cmd->add_flag("--json", verify.json, "emit JSON");

  BoundOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate the lower-bound formulas");
  bound_cmd->add_option("--n", bound.n, "P1 size")->required();
  bound_cmd->add_option("--m", bound.m, "P2 size")->required();
  bound_cmd->add_option("--log-convention", bound.log, "ln-clamped | log2-clamped")
      ->capture_default_str();
  bound_cmd->add_flag("--json", bound.json, "emit JSON");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep, CSV output");
  sweep_cmd->add_option("--n-list", sweep.n_list, "P1 sizes")->delimiter(',');
  sweep_cmd->add_option("--m-list", sweep.m_list, "P2 sizes")->delimiter(',');
  sweep_cmd->add_option("--seeds", sweep.seeds, "seeds")->delimiter(',');
  sweep_cmd->add_option("--k", sweep.k, "dimension")->capture_default_str();
  sweep_cmd->add_option("--c", sweep.c, "multiplicity bound before pruning")
      ->capture_default_str();
  sweep_cmd->add_option("--generator", sweep.generator, "random | cylinder | orthogonal")
      ->capture_default_str();
  sweep_cmd->add_option("--log-convention", sweep.log, "ln-clamped | log2-clamped")
      ->capture_default_str();
  sweep_cmd->add_option("--output", sweep.output, "output file (default stdout)");
  sweep_cmd->footer(
      "CSV columns:\n  " + std::string(kSweepColumns) +
      "\nn, m: requested sizes; m_kept: P2 size after pruning (random generator);\n"
      "x, Q, Q0, Q1: distinct count and energy; I: grid incidences (empty when not\n"
      "computed); bound_min, regime: lower-bound evaluation at (n, m_kept);\n"
      "ratio_x_over_bound = x / bound_min; ratio_Q_over_expr = Q / q_upper;\n"
      "chain_ok: x*Q >= (nm-x)^2 and 4xQ >= (nm)^2 when x <= nm/2;\n"
      "q0_ok: Q0 <= nm; bijection_ok: Q1 == I; error: generation failure.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*stats_cmd) return run_stats(stats);
    if (*reduce_cmd) return run_reduce(reduce);
    if (*verify_cmd) return run_verify(verify);
    if (*bound_cmd) return run_bound(bound);
    if (*sweep_cmd) return run_sweep_cmd(sweep);
  } catch (const InputError& e) {
    std::cerr << "ddlab: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "ddlab: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kBijectionViolation ? kExitCheckFailed
                                                      : kExitInputError;
  }
  return kExitInputError;
}
