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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ddlab/config.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

/// The curve (x + alpha)^2 - (y + beta)^2 + gamma = 0 of axis-parameter
/// pairs (x, y) with |(x,0,..,0) - p| = |(y,0,..,0) - q|.
/// alpha = -p1, beta = -q1, gamma = rho^2(p) - rho^2(q).
struct Hyperbola {
  Rational alpha;
  Rational beta;
  Rational gamma;
  std::size_t p = 0;  // P2 index of p
  std::size_t q = 0;  // P2 index of q

  // (x + alpha)^2 - (y + beta)^2 + gamma
  Rational eval(const Rational& x, const Rational& y) const;

  // Same curve, as point sets: the (alpha, beta, gamma) triple.
  bool same_curve(const Hyperbola& o) const {
    return alpha == o.alpha && beta == o.beta && gamma == o.gamma;
  }
};

// h_pq for P2 points p, q. Throws kDegenerateHyperbola if gamma == 0.
Hyperbola make_hyperbola(const Point& p, std::size_t p_idx, const Point& q,
                         std::size_t q_idx);

/// Coefficients of the expanded form
/// x^2 - y^2 + lin_x*x + lin_y*y + constant = 0.
struct ExpandedForm {
  Rational lin_x;
  Rational lin_y;
  Rational constant;
};
ExpandedForm expand(const Hyperbola& h);

/// Pi = P1 x P1, held implicitly through the sorted parameters. Includes
/// the diagonal.
struct GridPi {
  std::vector<Rational> params;

  explicit GridPi(const Config& cfg) : params(cfg.p1()) {}
  explicit GridPi(std::vector<Rational> p) : params(std::move(p)) {}
  std::size_t size() const { return params.size() * params.size(); }
};

/// One curve per ordered pair (p, q), p != q, in row-major (p, q) order.
struct GammaSet {
  std::vector<Hyperbola> curves;

  std::size_t positive() const;
  std::size_t negative() const;
};

// Throws kInvalidCount for m < 2, kDegenerateHyperbola for the first pair with
// equal rho^2 (checked before distinctness), and kDuplicateCurve for two
// pairs with the same (alpha, beta, gamma).
GammaSet build_gamma(const Config& cfg);

enum class IncidenceMode {
  kHashJoin,  // per-beta multiset of (t + beta)^2, probed with (s + alpha)^2 + gamma
  kNaive,     // evaluate every (grid point, curve) pair
};

struct IncidenceReport {
  std::uint64_t total = 0;
  std::uint64_t positive = 0;  // over curves with gamma > 0
  std::uint64_t negative = 0;  // over curves with gamma < 0
  std::vector<std::uint64_t> per_curve;  // aligned with GammaSet::curves
};

IncidenceReport incidences(const GridPi& grid, const GammaSet& gamma,
                           IncidenceMode mode = IncidenceMode::kHashJoin);

// (s, t) lies on h; grid positions are indices into GridPi::params.
struct Incidence {
  std::uint32_t s;
  std::uint32_t t;
  std::size_t curve;
};

// Every incidence, ordered by curve then (s, t).
std::vector<Incidence> list_incidences(const GridPi& grid,
                                       const GammaSet& gamma);

/// A quadruple (a, p, b, q): P1 indices a, b and P2 indices p, q.
struct Quadruple {
  std::uint32_t a;
  std::uint32_t p;
  std::uint32_t b;
  std::uint32_t q;

  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

struct BijectionReport {
  std::uint64_t q1 = 0;          // from the energy module
  std::uint64_t incidences = 0;  // I(Pi, Gamma), hash-join path
  // Populated when Q1 <= audit_limit: quadruple (a,p,b,q) <-> point (a,b)
  // on h_pq, both lists in matching order.
  std::vector<std::pair<Quadruple, Incidence>> pairing;
  bool audited = false;
};

// Requires the config to pass validation at c = 1 and m >= 2. Throws
// kBijectionViolation with a counterexample if the two sides disagree.
BijectionReport verify_bijection(const Config& cfg,
                                 std::size_t audit_limit = 100000);

enum class Branch { kTop, kBottom, kLeft, kRight };

// gamma > 0 curves split into top/bottom by the sign of t + beta. Throws
// kNotIncident when (s, t) is not on h and kWrongSign when gamma < 0.
Branch classify_branch(const Rational& s, const Rational& t,
                       const Hyperbola& h);

// gamma < 0 curves split into left/right by the sign of s + alpha. Throws
// kNotIncident or kWrongSign (gamma > 0) symmetrically.
Branch classify_branch_lr(const Rational& s, const Rational& t,
                          const Hyperbola& h);

struct IntersectionResult {
  int count = 0;                  // real intersection points, 0..2
  bool radical_degenerate = false;  // radical line reduced to 0 = nonzero
  // Exact points, present iff every intersection point is rational.
  std::optional<std::vector<std::pair<Rational, Rational>>> points;
};

// Intersects two curves of the family by way of their radical line and the
// exact discriminant of the resulting quadratic. Throws kIdenticalCurves for
// equal triples and kDegenerateHyperbola if either gamma is zero.
IntersectionResult intersection_count(const Hyperbola& h1,
                                      const Hyperbola& h2);

}  // namespace ddlab
