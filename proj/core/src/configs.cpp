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

#include "ddlab/configs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "ddlab/error.hpp"

namespace ddlab {
namespace {

// Uniform integer in [lo, hi] by rejection on raw mt19937_64 output, so the
// stream is identical across standard library implementations.
std::int64_t uniform_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t r;
  do {
    r = rng();
  } while (limit != 0 && r >= limit);
  return lo + static_cast<std::int64_t>(span == 0 ? r : r % span);
}

std::vector<std::size_t> scan_order(const std::vector<Point>& pts,
                                    const std::vector<std::size_t>& candidates) {
  std::vector<std::size_t> order = candidates;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pts[a] < pts[b];
  });
  return order;
}

PrunedConfig finish(const Config& cfg, std::vector<std::size_t> kept,
                    std::vector<Point> points, Side side, bool reflected) {
  std::vector<std::size_t> perm(kept.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return kept[a] < kept[b]; });
  std::vector<std::size_t> kept_sorted;
  std::vector<Point> pts_sorted;
  for (std::size_t i : perm) {
    kept_sorted.push_back(kept[i]);
    pts_sorted.push_back(std::move(points[i]));
  }
  Config pruned(cfg.k(), 1, cfg.p1(), std::move(pts_sorted));
  return PrunedConfig{cfg, std::move(pruned), std::move(kept_sorted), side,
                      reflected};
}

}  // namespace

PrunedConfig prune_planar(const Config& cfg) {
  if (cfg.k() != 2) {
    throw Error(ErrorCode::kInvalidInput, "prune_planar requires k = 2");
  }
  const auto& pts = cfg.p2();
  std::vector<std::size_t> upper, lower;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    int s = pts[j][1].sign();
    if (s > 0) upper.push_back(j);
    if (s < 0) lower.push_back(j);
  }
  if (upper.empty() && lower.empty()) {
    throw Error(ErrorCode::kEmptyResult, "no P2 point off the line");
  }
  const bool reflect = lower.size() > upper.size();
  std::vector<Point> side_pts(pts.size());
  for (std::size_t j : reflect ? lower : upper) {
    side_pts[j] = pts[j];
    if (reflect) side_pts[j][1] = -side_pts[j][1];
  }

  std::set<Rational> used_x, used_y;
  std::vector<std::size_t> kept;
  std::vector<Point> kept_pts;
  for (std::size_t j : scan_order(side_pts, reflect ? lower : upper)) {
    const Point& p = side_pts[j];
    if (used_x.count(p[0]) != 0 || used_y.count(p[1]) != 0) continue;
    used_x.insert(p[0]);
    used_y.insert(p[1]);
    kept.push_back(j);
    kept_pts.push_back(p);
  }
  return finish(cfg, std::move(kept), std::move(kept_pts), Side::kUpper,
                reflect);
}

PrunedConfig prune_general(const Config& cfg) {
  const auto& pts = cfg.p2();
  if (pts.empty()) throw Error(ErrorCode::kEmptyResult, "P2 is empty");
  std::vector<std::size_t> all(pts.size());
  std::iota(all.begin(), all.end(), 0);

  std::set<Rational> used_p1, used_rho;
  std::vector<std::size_t> kept;
  std::vector<Point> kept_pts;
  for (std::size_t j : scan_order(pts, all)) {
    Rational r = rho_sq(pts[j]);
    if (used_p1.count(pts[j][0]) != 0 || used_rho.count(r) != 0) continue;
    used_p1.insert(pts[j][0]);
    used_rho.insert(std::move(r));
    kept.push_back(j);
    kept_pts.push_back(pts[j]);
  }
  return finish(cfg, std::move(kept), std::move(kept_pts),
                Side::kNotApplicable, false);
}

std::size_t planar_prune_bound(std::size_t m, int c) {
  return m / (2 * (2 * static_cast<std::size_t>(c) - 1));
}

std::size_t general_prune_bound(std::size_t m, int c) {
  return m / (2 * static_cast<std::size_t>(c) - 1);
}

SqDistMatrix sq_dist_matrix(const Config& cfg) {
  SqDistMatrix out;
  out.n = cfg.n();
  out.m = cfg.m();
  out.provenance = SqDistMatrix::Provenance::kFromConfig;
  out.entries.reserve(out.n * out.m);
  std::vector<Rational> rho(cfg.m());
  for (std::size_t j = 0; j < cfg.m(); ++j) rho[j] = rho_sq(cfg.p2()[j]);
  for (std::size_t i = 0; i < cfg.n(); ++i) {
    for (std::size_t j = 0; j < cfg.m(); ++j) {
      out.entries.push_back(sq_dist(cfg.p1()[i], cfg.p2()[j][0], rho[j]));
    }
  }
  return out;
}

Config gen_cylinder_extremal(std::size_t n, std::size_t m, const Rational& h) {
  if (n == 0 || m == 0) {
    throw Error(ErrorCode::kInvalidCount, "n and m must be >= 1");
  }
  if (h.sign() <= 0) throw Error(ErrorCode::kInvalidInput, "h must be > 0");
  std::vector<Rational> p1;
  for (std::size_t i = 0; i < n; ++i) p1.emplace_back(static_cast<std::int64_t>(i));
  std::vector<Point> p2;
  for (std::size_t j = 0; j < m; ++j) {
    p2.push_back(Point{Rational(static_cast<std::int64_t>(j)), h});
  }
  return Config(2, static_cast<int>(m), std::move(p1), std::move(p2));
}

SqDistMatrix gen_orthogonal_extremal(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) {
    throw Error(ErrorCode::kInvalidCount, "n and m must be >= 1");
  }
  SqDistMatrix out;
  out.n = n;
  out.m = m;
  out.provenance = SqDistMatrix::Provenance::kAnalytic;
  out.name = "orthogonal";
  out.entries.reserve(n * m);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      out.entries.emplace_back(static_cast<std::int64_t>(i + j));
    }
  }
  return out;
}

Config gen_random(const RandomSpec& spec) {
  if (spec.n == 0 || spec.m == 0) {
    throw Error(ErrorCode::kInvalidCount, "n and m must be >= 1");
  }
  if (spec.k < 2 || spec.c < 1) {
    throw Error(ErrorCode::kInvalidInput, "need k >= 2 and c >= 1");
  }
  if (spec.coord_range < static_cast<std::int64_t>(spec.n + spec.m)) {
    throw Error(ErrorCode::kInvalidInput, "coord_range must be >= n + m");
  }
  if (spec.coord_range > kMaxCoordRange) {
    throw Error(ErrorCode::kInvalidInput, "coord_range must be <= 10^9");
  }
  const std::int64_t r = spec.coord_range;
  std::mt19937_64 rng(spec.seed);

  std::unordered_set<std::int64_t> p1_set;
  std::vector<Rational> p1;
  for (std::size_t draws = 0; p1.size() < spec.n; ++draws) {
    if (draws >= spec.n + kResamplesPerPoint * spec.n) {
      throw Error(ErrorCode::kGenerationExhausted, "P1 retry budget exhausted");
    }
    std::int64_t v = uniform_in(rng, -r, r);
    if (p1_set.insert(v).second) p1.emplace_back(v);
  }

  std::unordered_map<std::int64_t, int> x1_count;
  std::unordered_map<std::int64_t, int> rho_count;
  std::vector<Point> p2;
  std::size_t resamples = 0;
  while (p2.size() < spec.m) {
    std::vector<std::int64_t> coords(static_cast<std::size_t>(spec.k));
    std::int64_t rho = 0;
    for (int i = 0; i < spec.k; ++i) {
      coords[i] = uniform_in(rng, -r, r);
      if (i > 0) rho += coords[i] * coords[i];
    }
    if (x1_count[coords[0]] >= spec.c || rho_count[rho] >= spec.c) {
      if (++resamples > kResamplesPerPoint * spec.m) {
        throw Error(ErrorCode::kGenerationExhausted,
                    "P2 retry budget of " +
                        std::to_string(kResamplesPerPoint * spec.m) +
                        " resamples exhausted");
      }
      continue;
    }
    ++x1_count[coords[0]];
    ++rho_count[rho];
    std::vector<Rational> pc(coords.begin(), coords.end());
    p2.emplace_back(std::move(pc));
  }
  return Config(spec.k, spec.c, std::move(p1), std::move(p2));
}

}  // namespace ddlab
