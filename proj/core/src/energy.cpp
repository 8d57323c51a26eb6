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

#include "ddlab/energy.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>

#include "ddlab/error.hpp"

namespace ddlab {
namespace {

template <typename Key>
struct LocalGroups {
  std::vector<Key> keys;            // local id -> key
  std::vector<std::uint32_t> ids;   // per pair in the row range, row-major
};

// Groups the pairs of rows [row_begin, row_end) by key. KeyFn(i, j) yields the
// squared distance of pair (i, j).
template <typename Key, typename KeyFn>
LocalGroups<Key> group_rows(std::size_t row_begin, std::size_t row_end,
                            std::size_t m, const KeyFn& key_of) {
  LocalGroups<Key> out;
  std::unordered_map<Key, std::uint32_t> index;
  index.reserve((row_end - row_begin) * m);
  out.ids.reserve((row_end - row_begin) * m);
  for (std::size_t i = row_begin; i < row_end; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Key key = key_of(i, j);
      auto [it, inserted] =
          index.try_emplace(key, static_cast<std::uint32_t>(out.keys.size()));
      if (inserted) out.keys.push_back(std::move(key));
      out.ids.push_back(it->second);
    }
  }
  return out;
}

template <typename Key, typename KeyFn>
DistanceClasses build_classes(std::size_t n, std::size_t m, unsigned workers,
                              const KeyFn& key_of) {
  if (n == 0 || m == 0) {
    throw Error(ErrorCode::kInvalidCount, "distance classes need n, m >= 1");
  }
  if (n * m > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kTooLarge, "n*m exceeds 2^32 pairs");
  }
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(n));
  std::vector<std::size_t> bounds(workers + 1);
  for (unsigned w = 0; w <= workers; ++w) bounds[w] = n * w / workers;

  std::vector<LocalGroups<Key>> parts(workers);
  if (workers == 1) {
    parts[0] = group_rows<Key>(0, n, m, key_of);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        parts[w] = group_rows<Key>(bounds[w], bounds[w + 1], m, key_of);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Merge local ids into global ids.
  std::unordered_map<Key, std::uint32_t> global;
  std::vector<Key> keys;
  std::vector<std::vector<std::uint32_t>> remap(workers);
  if (workers == 1) {
    keys = std::move(parts[0].keys);
    remap[0].resize(keys.size());
    std::iota(remap[0].begin(), remap[0].end(), 0u);
  } else {
    for (unsigned w = 0; w < workers; ++w) {
      remap[w].reserve(parts[w].keys.size());
      for (auto& key : parts[w].keys) {
        auto [it, inserted] =
            global.try_emplace(key, static_cast<std::uint32_t>(keys.size()));
        if (inserted) keys.push_back(std::move(key));
        remap[w].push_back(it->second);
      }
    }
  }

  // Rank classes by key.
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  std::vector<std::uint32_t> rank(keys.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<std::uint32_t>(r);

  std::vector<std::size_t> offsets(keys.size() + 1, 0);
  for (unsigned w = 0; w < workers; ++w) {
    for (std::uint32_t id : parts[w].ids) ++offsets[rank[remap[w][id]] + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  // Row-major fill keeps each class sorted by (p1, p2).
  std::vector<PairIndex> pairs(n * m);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t pos = 0;
    for (std::size_t i = bounds[w]; i < bounds[w + 1]; ++i) {
      for (std::size_t j = 0; j < m; ++j, ++pos) {
        std::uint32_t r = rank[remap[w][parts[w].ids[pos]]];
        pairs[cursor[r]++] = {static_cast<std::uint32_t>(i),
                              static_cast<std::uint32_t>(j)};
      }
    }
    parts[w] = {};
  }

  std::vector<Rational> sorted_keys;
  sorted_keys.reserve(keys.size());
  for (std::uint32_t id : order) sorted_keys.emplace_back(std::move(keys[id]));
  return DistanceClasses(n, m, std::move(sorted_keys), std::move(offsets),
                         std::move(pairs));
}

// Squared distances of an all-integer config fit in int64 when every
// |a - p1| + sum_i |p_i| stays below 2^31 / sqrt(k).
constexpr std::int64_t kFastCoordLimit = 1 << 28;

bool small_integer(const Rational& r) {
  return r.is_integer() && abs(r) < Rational(kFastCoordLimit);
}

std::optional<std::vector<std::int64_t>> integer_view(const std::vector<Rational>& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& r : v) {
    if (!small_integer(r)) return std::nullopt;
    out.push_back(r.numerator().get_si());
  }
  return out;
}

}  // namespace

DistanceClasses::DistanceClasses(std::size_t n, std::size_t m,
                                 std::vector<Rational> keys,
                                 std::vector<std::size_t> offsets,
                                 std::vector<PairIndex> pairs)
    : n_(n),
      m_(m),
      keys_(std::move(keys)),
      offsets_(std::move(offsets)),
      pairs_(std::move(pairs)) {
  if (offsets_.size() != keys_.size() + 1 || offsets_.front() != 0 ||
      offsets_.back() != pairs_.size() || pairs_.size() != n_ * m_) {
    throw Error(ErrorCode::kInvalidInput, "inconsistent distance classes");
  }
}

unsigned default_workers() {
  if (const char* env = std::getenv("DDLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

DistanceClasses distance_classes(const Config& cfg, unsigned workers,
                                 GroupingPath path) {
  if (path == GroupingPath::kAuto && cfg.k() <= 16) {
    auto p1 = integer_view(cfg.p1());
    std::vector<Rational> flat;
    for (const auto& p : cfg.p2()) flat.insert(flat.end(), p.coords().begin(), p.coords().end());
    auto p2 = integer_view(flat);
    if (p1 && p2) {
      const std::size_t k = static_cast<std::size_t>(cfg.k());
      std::vector<std::int64_t> x1(cfg.m()), rho(cfg.m(), 0);
      for (std::size_t j = 0; j < cfg.m(); ++j) {
        x1[j] = (*p2)[j * k];
        for (std::size_t i = 1; i < k; ++i) rho[j] += (*p2)[j * k + i] * (*p2)[j * k + i];
      }
      const auto& a = *p1;
      return build_classes<std::int64_t>(
          cfg.n(), cfg.m(), workers, [&](std::size_t i, std::size_t j) {
            const std::int64_t d = a[i] - x1[j];
            return d * d + rho[j];
          });
    }
  }
  std::vector<Rational> rho(cfg.m());
  for (std::size_t j = 0; j < cfg.m(); ++j) rho[j] = rho_sq(cfg.p2()[j]);
  const auto& p1 = cfg.p1();
  const auto& p2 = cfg.p2();
  return build_classes<Rational>(cfg.n(), cfg.m(), workers, [&](std::size_t i, std::size_t j) {
    return sq_dist(p1[i], p2[j][0], rho[j]);
  });
}

DistanceClasses distance_classes(const SqDistMatrix& matrix, unsigned workers,
                                 GroupingPath path) {
  if (matrix.entries.size() != matrix.n * matrix.m) {
    throw Error(ErrorCode::kInvalidInput, "matrix size mismatch");
  }
  if (path == GroupingPath::kAuto) {
    const bool fits = std::all_of(matrix.entries.begin(), matrix.entries.end(),
                                  [](const Rational& r) {
                                    return r.is_integer() && r.numerator().fits_slong_p();
                                  });
    if (fits) {
      return build_classes<std::int64_t>(matrix.n, matrix.m, workers,
                                 [&](std::size_t i, std::size_t j) {
                                   return matrix.at(i, j).numerator().get_si();
                                 });
    }
  }
  return build_classes<Rational>(matrix.n, matrix.m, workers,
                       [&](std::size_t i, std::size_t j) { return matrix.at(i, j); });
}

EnergyReport energy(const DistanceClasses& classes) {
  EnergyReport r;
  r.n = classes.n();
  r.m = classes.m();
  r.x = classes.size();
  std::vector<std::uint32_t> column_count(classes.m(), 0);
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::uint64_t e = classes.class_size(i);
    r.q += e * (e - 1);
    ++hist[e];
    auto members = classes.members(i);
    for (const auto& pr : members) ++column_count[pr.p2];
    for (const auto& pr : members) {
      std::uint64_t c = column_count[pr.p2];
      r.q0 += c * (c - 1);  // zeroed below, so each column counts once
      column_count[pr.p2] = 0;
    }
  }
  r.q1 = r.q - r.q0;
  r.histogram.assign(hist.begin(), hist.end());
  return r;
}

ChainReport check_chain(const EnergyReport& report, std::size_t n,
                        std::size_t m) {
  ChainReport c;
  const Integer nm = Integer(static_cast<unsigned long>(n)) *
                     Integer(static_cast<unsigned long>(m));
  const Integer x(static_cast<unsigned long>(report.x));
  const Integer q(static_cast<unsigned long>(report.q));
  const Integer gap = nm - x;
  c.slack = x * q - gap * gap;
  c.cauchy_schwarz = c.slack >= 0;
  c.x_at_most_half = 2 * x <= nm;
  if (report.q == 0) {
    c.lower_bound = LowerBoundStatus::kDivisionGuard;
  } else if (!c.x_at_most_half) {
    c.lower_bound = LowerBoundStatus::kNotApplicable;
  } else {
    c.lower_bound = 4 * x * q >= nm * nm ? LowerBoundStatus::kHolds
                                         : LowerBoundStatus::kFails;
  }
  c.q0_within_nm = Integer(static_cast<unsigned long>(report.q0)) <= nm;
  return c;
}

}  // namespace ddlab
