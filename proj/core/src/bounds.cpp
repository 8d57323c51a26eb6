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

#include "ddlab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include <gmpxx.h>

namespace ddlab {
namespace {

mpz_class big(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

}  // namespace

double clamped_log(double v, LogConvention conv) {
  const double l = conv == LogConvention::kLog2Clamped ? std::log2(v) : std::log(v);
  return std::max(l, 1.0);
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kR1: return "R1";
    case Regime::kR2: return "R2";
    case Regime::kR3: return "R3";
    case Regime::kR4: return "R4";
  }
  return "?";
}

Regime regime(std::uint64_t n, std::uint64_t m, LogConvention conv) {
  const mpz_class nz = big(n);
  const mpz_class mz = big(m);
  if (mz * mz <= nz) return Regime::kR1;
  const double upper2 = std::pow(static_cast<double>(n), 0.8) /
                        std::pow(clamped_log(static_cast<double>(n), conv), 0.6);
  if (static_cast<double>(m) <= upper2) return Regime::kR2;
  if (mz <= nz * nz * nz) return Regime::kR3;
  return Regime::kR4;
}

BoundReport theorem1_bound(std::uint64_t n, std::uint64_t m, LogConvention conv) {
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  BoundReport r;
  r.n = n;
  r.m = m;
  r.regime = regime(n, m, conv);
  r.terms.m2 = md * md;
  r.terms.n23m23 = std::cbrt(nd * md) * std::cbrt(nd * md);
  r.terms.logterm = std::pow(nd, 10.0 / 11.0) * std::pow(md, 4.0 / 11.0) /
                    std::pow(clamped_log(md, conv), 2.0 / 11.0);
  r.terms.n2 = nd * nd;
  r.min_value = std::min({r.terms.m2, r.terms.n23m23, r.terms.logterm, r.terms.n2});
  switch (r.regime) {
    case Regime::kR1: r.piecewise_value = r.terms.m2; break;
    case Regime::kR2: r.piecewise_value = r.terms.n23m23; break;
    case Regime::kR3: r.piecewise_value = r.terms.logterm; break;
    case Regime::kR4: r.piecewise_value = r.terms.n2; break;
  }
  return r;
}

double agarwal_bound(std::uint64_t p_count, std::uint64_t c_count,
                     LogConvention conv) {
  const double p = static_cast<double>(p_count);
  const double c = static_cast<double>(c_count);
  return std::pow(p * c, 2.0 / 3.0) +
         std::pow(p, 6.0 / 11.0) * std::pow(c, 9.0 / 11.0) *
             std::pow(clamped_log(c, conv), 2.0 / 11.0) +
         p + c;
}

double q_upper_expr(std::uint64_t n, std::uint64_t m, LogConvention conv) {
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  return std::pow(nd * md, 4.0 / 3.0) +
         std::pow(nd, 12.0 / 11.0) * std::pow(md, 18.0 / 11.0) *
             std::pow(clamped_log(md, conv), 2.0 / 11.0) +
         nd * nd + md * md;
}

}  // namespace ddlab
