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

#include "ddlab/reduction.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>

#include "ddlab/energy.hpp"
#include "ddlab/error.hpp"

namespace ddlab {
namespace {

std::string pair_str(std::size_t p, std::size_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// Curve indices grouped by their q (equivalently beta), in curve order.
std::map<std::size_t, std::vector<std::size_t>> group_by_q(const GammaSet& g) {
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < g.curves.size(); ++c) {
    groups[g.curves[c].q].push_back(c);
  }
  return groups;
}

// Real roots of a2*t^2 + a1*t + a0 = 0. Returns the count; fills `roots`
// when all roots are rational.
int solve_quadratic(const Rational& a2, const Rational& a1, const Rational& a0,
                    std::optional<std::vector<Rational>>* roots) {
  if (a2.is_zero()) {
    if (a1.is_zero()) {
      if (a0.is_zero()) {
        throw Error(ErrorCode::kInvalidInput,
                    "line contained in a non-degenerate hyperbola");
      }
      *roots = std::vector<Rational>{};
      return 0;
    }
    *roots = std::vector<Rational>{-a0 / a1};
    return 1;
  }
  const Rational disc = a1.square() - Rational(4) * a2 * a0;
  const Rational two_a = Rational(2) * a2;
  if (disc.sign() < 0) {
    *roots = std::vector<Rational>{};
    return 0;
  }
  if (disc.is_zero()) {
    *roots = std::vector<Rational>{-a1 / two_a};
    return 1;
  }
  Rational sq;
  if (exact_sqrt(disc, &sq)) {
    *roots = std::vector<Rational>{(-a1 - sq) / two_a, (-a1 + sq) / two_a};
  } else {
    roots->reset();
  }
  return 2;
}

}  // namespace

Rational Hyperbola::eval(const Rational& x, const Rational& y) const {
  return (x + alpha).square() - (y + beta).square() + gamma;
}

Hyperbola make_hyperbola(const Point& p, std::size_t p_idx, const Point& q,
                         std::size_t q_idx) {
  Hyperbola h{-p[0], -q[0], rho_sq(p) - rho_sq(q), p_idx, q_idx};
  if (h.gamma.is_zero()) {
    throw Error(ErrorCode::kDegenerateHyperbola,
                "h" + pair_str(p_idx, q_idx) +
                    " is degenerate: equal squared distance to the line");
  }
  return h;
}

ExpandedForm expand(const Hyperbola& h) {
  // (x+a)^2 - (y+b)^2 + g = x^2 - y^2 + 2a x - 2b y + a^2 - b^2 + g
  return {Rational(2) * h.alpha, Rational(-2) * h.beta,
          h.alpha.square() - h.beta.square() + h.gamma};
}

std::size_t GammaSet::positive() const {
  return std::count_if(curves.begin(), curves.end(),
                       [](const Hyperbola& h) { return h.gamma.sign() > 0; });
}

std::size_t GammaSet::negative() const {
  return std::count_if(curves.begin(), curves.end(),
                       [](const Hyperbola& h) { return h.gamma.sign() < 0; });
}

GammaSet build_gamma(const Config& cfg) {
  const std::size_t m = cfg.m();
  if (m < 2) throw Error(ErrorCode::kInvalidCount, "Gamma needs m >= 2");
  std::vector<Rational> rho(m);
  std::map<Rational, std::size_t> first_at;
  for (std::size_t j = 0; j < m; ++j) {
    rho[j] = rho_sq(cfg.p2()[j]);
    auto [it, inserted] = first_at.try_emplace(rho[j], j);
    if (!inserted) {
      throw Error(ErrorCode::kDegenerateHyperbola,
                  "h" + pair_str(it->second, j) + " is degenerate: rho^2 = " +
                      rho[j].to_string() + " shared");
    }
  }

  GammaSet g;
  g.curves.reserve(m * (m - 1));
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if (p == q) continue;
      g.curves.push_back({-cfg.p2()[p][0], -cfg.p2()[q][0], rho[p] - rho[q], p, q});
    }
  }

  std::vector<std::size_t> order(g.curves.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto triple = [&](std::size_t i) {
    const auto& h = g.curves[i];
    return std::tie(h.alpha, h.beta, h.gamma);
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return triple(a) < triple(b); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (triple(order[i - 1]) == triple(order[i])) {
      const auto& a = g.curves[order[i - 1]];
      const auto& b = g.curves[order[i]];
      throw Error(ErrorCode::kDuplicateCurve,
                  "h" + pair_str(a.p, a.q) + " and h" + pair_str(b.p, b.q) +
                      " coincide");
    }
  }
  return g;
}

IncidenceReport incidences(const GridPi& grid, const GammaSet& gamma,
                           IncidenceMode mode) {
  IncidenceReport r;
  r.per_curve.assign(gamma.curves.size(), 0);
  const auto& params = grid.params;

  if (mode == IncidenceMode::kNaive) {
    for (std::size_t c = 0; c < gamma.curves.size(); ++c) {
      const Hyperbola& h = gamma.curves[c];
      for (const auto& s : params) {
        for (const auto& t : params) {
          if (h.eval(s, t).is_zero()) ++r.per_curve[c];
        }
      }
    }
  } else {
    for (const auto& [q, members] : group_by_q(gamma)) {
      const Rational& beta = gamma.curves[members.front()].beta;
      std::unordered_map<Rational, std::uint64_t> build;
      build.reserve(params.size());
      for (const auto& t : params) ++build[(t + beta).square()];
      for (std::size_t c : members) {
        const Hyperbola& h = gamma.curves[c];
        for (const auto& s : params) {
          auto it = build.find((s + h.alpha).square() + h.gamma);
          if (it != build.end()) r.per_curve[c] += it->second;
        }
      }
    }
  }

  for (std::size_t c = 0; c < gamma.curves.size(); ++c) {
    r.total += r.per_curve[c];
    (gamma.curves[c].gamma.sign() > 0 ? r.positive : r.negative) += r.per_curve[c];
  }
  return r;
}

std::vector<Incidence> list_incidences(const GridPi& grid,
                                       const GammaSet& gamma) {
  const auto& params = grid.params;
  std::vector<Incidence> out;
  for (const auto& [q, members] : group_by_q(gamma)) {
    const Rational& beta = gamma.curves[members.front()].beta;
    std::unordered_map<Rational, std::vector<std::uint32_t>> build;
    for (std::uint32_t t = 0; t < params.size(); ++t) {
      build[(params[t] + beta).square()].push_back(t);
    }
    for (std::size_t c : members) {
      const Hyperbola& h = gamma.curves[c];
      for (std::uint32_t s = 0; s < params.size(); ++s) {
        auto it = build.find((params[s] + h.alpha).square() + h.gamma);
        if (it == build.end()) continue;
        for (std::uint32_t t : it->second) out.push_back({s, t, c});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Incidence& a, const Incidence& b) {
    return std::tie(a.curve, a.s, a.t) < std::tie(b.curve, b.s, b.t);
  });
  return out;
}

BijectionReport verify_bijection(const Config& cfg, std::size_t audit_limit) {
  if (!validate_constraints(cfg, 1).ok()) {
    throw Error(ErrorCode::kInvalidInput,
                "bijection check requires a configuration valid at c = 1");
  }
  const DistanceClasses classes = distance_classes(cfg);
  const EnergyReport e = energy(classes);
  const GridPi grid(cfg);
  const GammaSet gamma = build_gamma(cfg);
  const IncidenceReport inc = incidences(grid, gamma, IncidenceMode::kHashJoin);

  BijectionReport r;
  r.q1 = e.q1;
  r.incidences = inc.total;
  if (r.q1 != r.incidences) {
    throw Error(ErrorCode::kBijectionViolation,
                "Q1 = " + std::to_string(r.q1) + " but I(Pi, Gamma) = " +
                    std::to_string(r.incidences));
  }
  if (r.q1 > audit_limit) return r;

  // Quadruples with p != q, straight from the distance classes.
  std::vector<Quadruple> quads;
  quads.reserve(r.q1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto members = classes.members(i);
    for (const auto& u : members) {
      for (const auto& v : members) {
        if (u.p2 != v.p2) quads.push_back({u.p1, u.p2, v.p1, v.p2});
      }
    }
  }
  std::sort(quads.begin(), quads.end());

  std::vector<std::pair<Quadruple, Incidence>> mapped;
  for (const Incidence& inc_pt : list_incidences(grid, gamma)) {
    const Hyperbola& h = gamma.curves[inc_pt.curve];
    mapped.push_back({{inc_pt.s, static_cast<std::uint32_t>(h.p), inc_pt.t,
                       static_cast<std::uint32_t>(h.q)},
                      inc_pt});
  }
  std::sort(mapped.begin(), mapped.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const std::size_t common = std::min(quads.size(), mapped.size());
  for (std::size_t i = 0; i <= common; ++i) {
    const bool end_q = i == quads.size();
    const bool end_m = i == mapped.size();
    if (end_q && end_m) break;
    if (end_q || end_m || quads[i] != mapped[i].first) {
      const Quadruple& bad = end_m || (!end_q && quads[i] < mapped[i].first)
                                 ? quads[i]
                                 : mapped[i].first;
      throw Error(ErrorCode::kBijectionViolation,
                  "unmatched quadruple (a=" + std::to_string(bad.a) +
                      ", p=" + std::to_string(bad.p) + ", b=" +
                      std::to_string(bad.b) + ", q=" + std::to_string(bad.q) + ")");
    }
    const Quadruple& qd = quads[i];
    if (sq_dist(cfg.p1()[qd.a], cfg.p2()[qd.p]) !=
        sq_dist(cfg.p1()[qd.b], cfg.p2()[qd.q])) {
      throw Error(ErrorCode::kBijectionViolation,
                  "paired quadruple with unequal distances");
    }
  }
  r.pairing = std::move(mapped);
  r.audited = true;
  return r;
}

Branch classify_branch(const Rational& s, const Rational& t,
                       const Hyperbola& h) {
  if (!h.eval(s, t).is_zero()) {
    throw Error(ErrorCode::kNotIncident, "point not on the curve");
  }
  if (h.gamma.sign() < 0) {
    throw Error(ErrorCode::kWrongSign, "gamma < 0: use the left/right split");
  }
  // gamma > 0 and incident imply (t + beta)^2 = (s + alpha)^2 + gamma > 0.
  return (t + h.beta).sign() > 0 ? Branch::kTop : Branch::kBottom;
}

Branch classify_branch_lr(const Rational& s, const Rational& t,
                          const Hyperbola& h) {
  if (!h.eval(s, t).is_zero()) {
    throw Error(ErrorCode::kNotIncident, "point not on the curve");
  }
  if (h.gamma.sign() > 0) {
    throw Error(ErrorCode::kWrongSign, "gamma > 0: use the top/bottom split");
  }
  return (s + h.alpha).sign() > 0 ? Branch::kRight : Branch::kLeft;
}

IntersectionResult intersection_count(const Hyperbola& h1,
                                      const Hyperbola& h2) {
  if (h1.gamma.is_zero() || h2.gamma.is_zero()) {
    throw Error(ErrorCode::kDegenerateHyperbola, "gamma must be nonzero");
  }
  if (h1.same_curve(h2)) {
    throw Error(ErrorCode::kIdenticalCurves, "curves coincide");
  }
  // Radical line A x + B y + C = 0 from h1 - h2.
  const Rational a = Rational(2) * (h1.alpha - h2.alpha);
  const Rational b = Rational(-2) * (h1.beta - h2.beta);
  const Rational c = h1.alpha.square() - h2.alpha.square() -
                     h1.beta.square() + h2.beta.square() + h1.gamma - h2.gamma;

  IntersectionResult out;
  if (a.is_zero() && b.is_zero()) {
    // Distinct triples with equal (alpha, beta) differ in gamma, so c != 0.
    out.radical_degenerate = true;
    out.points = std::vector<std::pair<Rational, Rational>>{};
    return out;
  }

  std::optional<std::vector<Rational>> roots;
  std::vector<std::pair<Rational, Rational>> pts;
  if (!b.is_zero()) {
    // y = u x + v; substitute into h1.
    const Rational u = -a / b;
    const Rational w = -c / b + h1.beta;
    out.count = solve_quadratic(Rational(1) - u.square(),
                                Rational(2) * (h1.alpha - u * w),
                                h1.alpha.square() - w.square() + h1.gamma, &roots);
    if (roots) {
      for (const auto& x : *roots) pts.emplace_back(x, u * x + w - h1.beta);
    }
  } else {
    // Vertical radical line x = x0; (y + beta)^2 = (x0 + alpha)^2 + gamma.
    const Rational x0 = -c / a;
    out.count = solve_quadratic(Rational(1), Rational(0),
                                -((x0 + h1.alpha).square() + h1.gamma), &roots);
    if (roots) {
      for (const auto& z : *roots) pts.emplace_back(x0, z - h1.beta);
    }
  }
  if (out.count > 2) {
    throw Error(ErrorCode::kInvalidInput, "more than two intersections");
  }
  if (roots) {
    for (const auto& [x, y] : pts) {
      if (!h1.eval(x, y).is_zero() || !h2.eval(x, y).is_zero()) {
        throw Error(ErrorCode::kInvalidInput,
                    "intersection point failed certification");
      }
    }
    out.points = std::move(pts);
  }
  return out;
}

}  // namespace ddlab
