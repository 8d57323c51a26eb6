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
#include <string>
#include <vector>

#include "ddlab/config.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

enum class Side { kUpper, kNotApplicable };

/// Result of greedy pruning. `pruned` holds the surviving P2 points (planar:
/// reflected to the upper halfplane when the lower side was chosen) with
/// c = 1; `kept_indices` refer to `base.p2()`.
struct PrunedConfig {
  Config base;
  Config pruned;
  std::vector<std::size_t> kept_indices;
  Side side = Side::kNotApplicable;
  bool reflected = false;
};

// Keeps points strictly on one side of l with pairwise distinct first and
// second coordinates. Requires k == 2; throws kEmptyResult when every P2
// point lies on l.
PrunedConfig prune_planar(const Config& cfg);

// Keeps points with pairwise distinct p1 and pairwise distinct rho^2.
// Throws kEmptyResult when P2 is empty.
PrunedConfig prune_general(const Config& cfg);

// Lower bounds on the size of the pruned set, as guaranteed for an input
// satisfying the multiplicity conditions with its own c.
std::size_t planar_prune_bound(std::size_t m, int c);
std::size_t general_prune_bound(std::size_t m, int c);

/// n x m table of exact squared distances. Carries configurations whose
/// coordinates are irrational but whose squared distances are rational.
struct SqDistMatrix {
  enum class Provenance { kFromConfig, kAnalytic };

  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Rational> entries;  // row-major, entry (i, j) at i * m + j
  Provenance provenance = Provenance::kAnalytic;
  std::string name;  // analytic construction name, empty for kFromConfig

  const Rational& at(std::size_t i, std::size_t j) const {
    return entries[i * m + j];
  }
};

SqDistMatrix sq_dist_matrix(const Config& cfg);

// P1 = {0..n-1} on l, P2 = {(j, h) : 0 <= j < m} on a line parallel to l.
// Every P2 point shares the same cylinder, so the returned config carries
// c = m. Throws kInvalidCount for n or m == 0, kInvalidInput for h <= 0.
Config gen_cylinder_extremal(std::size_t n, std::size_t m, const Rational& h);

// P1 = {(sqrt(i), 0) : 1 <= i <= n}, P2 = {(0, sqrt(j)) : 1 <= j <= m}.
// Squared distances are i + j.
SqDistMatrix gen_orthogonal_extremal(std::size_t n, std::size_t m);

struct RandomSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 2;
  std::uint64_t seed = 0;
  std::int64_t coord_range = 0;  // coordinates drawn from [-range, range]
  int c = 1;                     // multiplicity bound enforced on P2
};

// Keeps k * range^2 within 64 bits for k <= 8.
inline constexpr std::int64_t kMaxCoordRange = 1'000'000'000;

// Retry budget: 100 * m resamples for P2 (and 100 * n for P1).
inline constexpr std::size_t kResamplesPerPoint = 100;

// Random integer configuration satisfying both multiplicity conditions with
// spec.c, using std::mt19937_64 seeded with spec.seed. Throws kInvalidCount
// for n or m == 0, kInvalidInput when coord_range < n + m, and
// kGenerationExhausted past the retry budget.
Config gen_random(const RandomSpec& spec);

}  // namespace ddlab
