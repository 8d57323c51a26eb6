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

#include "ddlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <ostream>
#include <thread>
#include <tuple>

#include "ddlab/configs.hpp"
#include "ddlab/energy.hpp"
#include "ddlab/error.hpp"
#include "ddlab/reduction.hpp"

namespace ddlab {
namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

void fill_stats(SweepRow& row, const DistanceClasses& classes,
                const SweepSpec& spec) {
  const EnergyReport e = energy(classes);
  row.x = e.x;
  row.q = e.q;
  row.q0 = e.q0;
  row.q1 = e.q1;
  const ChainReport chain = check_chain(e, classes.n(), classes.m());
  row.chain_ok = chain.cauchy_schwarz && chain.lower_bound != LowerBoundStatus::kFails;
  row.q0_ok = chain.q0_within_nm;
  const BoundReport b = theorem1_bound(classes.n(), classes.m(), spec.log);
  row.bound_min = b.min_value;
  row.regime = b.regime;
  row.ratio_x_over_bound = static_cast<double>(e.x) / b.min_value;
  row.ratio_q_over_expr =
      static_cast<double>(e.q) / q_upper_expr(classes.n(), classes.m(), spec.log);
}

}  // namespace

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::kRandom: return "random";
    case Generator::kCylinder: return "cylinder";
    case Generator::kOrthogonal: return "orthogonal";
  }
  return "?";
}

std::optional<Generator> parse_generator(std::string_view s) {
  for (Generator g : {Generator::kRandom, Generator::kCylinder, Generator::kOrthogonal}) {
    if (to_string(g) == s) return g;
  }
  return std::nullopt;
}

SweepRow sweep_row(std::size_t n, std::size_t m, std::uint64_t seed,
                   const SweepSpec& spec) {
  SweepRow row;
  row.n = n;
  row.m = m;
  row.k = spec.k;
  row.seed = seed;
  row.generator = spec.generator;
  try {
    if (spec.generator == Generator::kOrthogonal) {
      const SqDistMatrix mat = gen_orthogonal_extremal(n, m);
      row.k = 2;
      row.m_kept = m;
      fill_stats(row, distance_classes(mat, 1), spec);
      return row;
    }

    std::optional<Config> cfg;
    if (spec.generator == Generator::kCylinder) {
      cfg = gen_cylinder_extremal(n, m, Rational(1));
      row.k = 2;
    } else {
      RandomSpec rs{n, m, spec.k, seed, static_cast<std::int64_t>(n + m), spec.c};
      const Config raw = gen_random(rs);
      cfg = (spec.k == 2 ? prune_planar(raw) : prune_general(raw)).pruned;
    }
    row.m_kept = cfg->m();
    fill_stats(row, distance_classes(*cfg, 1), spec);

    const std::uint64_t mk = cfg->m();
    const std::uint64_t work = static_cast<std::uint64_t>(n) * n * mk * (mk - 1);
    if (mk >= 2 && work <= kSweepIncidenceLimit &&
        validate_constraints(*cfg, 1).ok()) {
      const IncidenceReport inc = incidences(GridPi(*cfg), build_gamma(*cfg));
      row.incidences = inc.total;
      row.bijection_ok = inc.total == row.q1;
    }
  } catch (const Error& e) {
    SweepRow failed;
    failed.n = n;
    failed.m = m;
    failed.k = spec.k;
    failed.seed = seed;
    failed.generator = spec.generator;
    failed.bijection_ok = false;
    failed.error = std::string(to_string(e.code())) + ": " + e.what();
    return failed;
  }
  return row;
}

std::vector<SweepRow> compute_sweep(const SweepSpec& spec) {
  using Task = std::tuple<std::size_t, std::size_t, std::uint64_t>;
  std::vector<Task> tasks;
  for (std::size_t n : spec.n_list) {
    for (std::size_t m : spec.m_list) {
      for (std::uint64_t seed : spec.seeds) tasks.emplace_back(n, m, seed);
    }
  }
  std::sort(tasks.begin(), tasks.end());
  tasks.erase(std::unique(tasks.begin(), tasks.end()), tasks.end());

  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& [n, m, seed] = tasks[i];
      rows[i] = sweep_row(n, m, seed, spec);
    }
  };
  const unsigned workers = std::clamp<unsigned>(
      spec.workers, 1, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepColumns << "\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const auto& r : rows) {
    out << r.n << "," << r.m << "," << r.k << "," << r.seed << ","
        << to_string(r.generator) << "," << r.m_kept << "," << r.x << ","
        << r.q << "," << r.q0 << "," << r.q1 << ",";
    if (r.incidences) out << *r.incidences;
    out << "," << format_double(r.bound_min) << "," << to_string(r.regime) << ","
        << format_double(r.ratio_x_over_bound) << ","
        << format_double(r.ratio_q_over_expr) << "," << flag(r.chain_ok) << ","
        << flag(r.q0_ok) << "," << flag(r.bijection_ok) << ","
        << csv_escape(r.error) << "\n";
  }
}

void run_sweep(const SweepSpec& spec, std::ostream& out) {
  write_sweep_csv(out, compute_sweep(spec));
}

}  // namespace ddlab
