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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddlab/bounds.hpp"

namespace ddlab {

enum class Generator { kRandom, kCylinder, kOrthogonal };

std::string_view to_string(Generator g);
std::optional<Generator> parse_generator(std::string_view s);

struct SweepSpec {
  std::vector<std::size_t> n_list;
  std::vector<std::size_t> m_list;
  int k = 2;
  std::vector<std::uint64_t> seeds;
  Generator generator = Generator::kRandom;
  int c = 1;
  LogConvention log = LogConvention::kLnClamped;
  unsigned workers = 1;
};

/// One measured configuration. For the random generator the statistics are
/// taken on the pruned configuration (m_kept points of P2); extremal
/// constructions are measured as generated.
struct SweepRow {
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 2;
  std::uint64_t seed = 0;
  Generator generator = Generator::kRandom;
  std::size_t m_kept = 0;
  std::uint64_t x = 0;
  std::uint64_t q = 0;
  std::uint64_t q0 = 0;
  std::uint64_t q1 = 0;
  std::optional<std::uint64_t> incidences;  // when the reduction applies
  double bound_min = 0;
  Regime regime = Regime::kR1;
  double ratio_x_over_bound = 0;
  double ratio_q_over_expr = 0;
  bool chain_ok = false;     // x*Q >= (nm-x)^2 and the rearranged lower bound
  bool q0_ok = false;        // Q0 <= nm
  bool bijection_ok = true;  // Q1 == I when incidences are computed
  std::string error;         // non-empty when generation failed
};

inline constexpr std::string_view kSweepColumns =
    "n,m,k,seed,generator,m_kept,x,Q,Q0,Q1,I,bound_min,regime,"
    "ratio_x_over_bound,ratio_Q_over_expr,chain_ok,q0_ok,bijection_ok,error";

// Incidence counting is skipped above this n^2 * m(m-1).
inline constexpr std::uint64_t kSweepIncidenceLimit = 50'000'000;

// Rows in (n, m, seed) order, independent of the worker count.
std::vector<SweepRow> compute_sweep(const SweepSpec& spec);

SweepRow sweep_row(std::size_t n, std::size_t m, std::uint64_t seed,
                   const SweepSpec& spec);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// compute_sweep followed by write_sweep_csv.
void run_sweep(const SweepSpec& spec, std::ostream& out);

}  // namespace ddlab
