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
#include <initializer_list>
#include <span>
#include <vector>

#include "ddlab/rational.hpp"

namespace ddlab {

/// A point of R^k. The first coordinate is the parameter along the
/// canonical line l (the x1-axis); the rest are transverse.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  // Lexicographic, used as the deterministic scan order for pruning.
  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Rational> coords_;
};

// Squared distance from p to l: sum of p_i^2 over i >= 2.
Rational rho_sq(const Point& p);

// Squared distance between the axis point (a, 0, ..., 0) and p.
Rational sq_dist(const Rational& a, const Point& p);

// Same as sq_dist, with rho_sq(p) supplied by the caller for bulk loops.
inline Rational sq_dist(const Rational& a, const Rational& p1,
                        const Rational& p_rho_sq) {
  Rational d = a - p1;
  d *= d;
  d += p_rho_sq;
  return d;
}

}  // namespace ddlab
