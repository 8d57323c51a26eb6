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

#include <cstdint>
#include <string_view>

namespace ddlab {

// Logarithm used inside the bound formulas; both variants are clamped below
// at 1 so that log(1) terms stay finite and positive.
enum class LogConvention { kLnClamped, kLog2Clamped };

double clamped_log(double v, LogConvention conv);

enum class Regime { kR1, kR2, kR3, kR4 };

std::string_view to_string(Regime r);

//  R1: m <= n^(1/2)
//  R2: n^(1/2) < m <= n^(4/5) / log^(3/5) n
//  R3: n^(4/5) / log^(3/5) n < m <= n^3
//  R4: m > n^3
// The first and last thresholds are decided in exact integer arithmetic.
Regime regime(std::uint64_t n, std::uint64_t m,
              LogConvention conv = LogConvention::kLnClamped);

struct BoundTerms {
  double m2 = 0;
  double n23m23 = 0;
  double logterm = 0;  // n^(10/11) m^(4/11) / log^(2/11) m
  double n2 = 0;
};

struct BoundReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Regime regime = Regime::kR1;
  BoundTerms terms;
  double min_value = 0;
  double piecewise_value = 0;
};

// All Omega/O constants are taken as 1.
BoundReport theorem1_bound(std::uint64_t n, std::uint64_t m,
                           LogConvention conv = LogConvention::kLnClamped);

// |P|^(2/3)|C|^(2/3) + |P|^(6/11)|C|^(9/11) log^(2/11)|C| + |P| + |C|
double agarwal_bound(std::uint64_t p_count, std::uint64_t c_count,
                     LogConvention conv = LogConvention::kLnClamped);

// n^(4/3)m^(4/3) + n^(12/11)m^(18/11) log^(2/11) m + n^2 + m^2
double q_upper_expr(std::uint64_t n, std::uint64_t m,
                    LogConvention conv = LogConvention::kLnClamped);

}  // namespace ddlab
