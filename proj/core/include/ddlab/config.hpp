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
#include <string>
#include <vector>

#include "ddlab/geometry.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

/// P1 (n points on the x1-axis, stored as sorted distinct parameters) and
/// P2 (m points of R^k), together with the multiplicity constant c.
class Config {
 public:
  // Sorts p1; throws Error(kInvalidInput) for k < 2, c < 1, repeated P1
  // parameters, or a P2 point whose dimension differs from k.
  Config(int k, int c, std::vector<Rational> p1, std::vector<Point> p2);

  int k() const { return k_; }
  int c() const { return c_; }
  std::size_t n() const { return p1_.size(); }
  std::size_t m() const { return p2_.size(); }
  const std::vector<Rational>& p1() const { return p1_; }
  const std::vector<Point>& p2() const { return p2_; }

  Config with_c(int c) const { return Config(k_, c, p1_, p2_); }

  friend bool operator==(const Config&, const Config&) = default;

 private:
  int k_;
  int c_;
  std::vector<Rational> p1_;
  std::vector<Point> p2_;
};

enum class Constraint {
  kHyperplane,  // too many points with the same p1 (hyperplane orthogonal to l)
  kCylinder,    // too many points with the same rho^2 (cylinder around l)
};

struct Violation {
  Constraint constraint;
  Rational witness;                  // the shared p1 or rho^2 value
  std::vector<std::size_t> indices;  // all P2 indices sharing it, ascending
};

struct ValidationReport {
  int bound = 1;
  std::vector<Violation> violations;  // hyperplane first, then by witness

  bool ok() const { return violations.empty(); }
  bool hyperplane_ok() const;
  bool cylinder_ok() const;
};

// Checks both multiplicity conditions against `bound` (defaults to cfg.c()).
ValidationReport validate_constraints(const Config& cfg);
ValidationReport validate_constraints(const Config& cfg, int bound);

}  // namespace ddlab
