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

#include "ddlab/config.hpp"
#include "ddlab/configs.hpp"
#include "ddlab/reduction.hpp"

namespace ddlab {

// Brute-force checkers. They share no code with the energy and reduction
// fast paths beyond the scalar type.

inline constexpr std::size_t kQuadrupleOracleLimit = 2000;         // n*m
inline constexpr std::uint64_t kIncidenceOracleLimit = 10'000'000;  // n^2*|Gamma|

struct QuadrupleCounts {
  std::uint64_t q = 0;
  std::uint64_t q0 = 0;
  std::uint64_t q1 = 0;

  friend bool operator==(const QuadrupleCounts&,
                         const QuadrupleCounts&) = default;
};

// Enumerates all ordered pairs ((a,p),(b,q)) of distinct (P1, P2) pairs with
// equal squared distance. Throws kTooLarge past kQuadrupleOracleLimit.
QuadrupleCounts oracle_quadruples(const Config& cfg);
QuadrupleCounts oracle_quadruples(const SqDistMatrix& matrix);

// Evaluates the expanded curve equation at every grid point. Throws
// kTooLarge past kIncidenceOracleLimit.
std::uint64_t oracle_incidences(const GridPi& grid, const GammaSet& gamma);

}  // namespace ddlab
