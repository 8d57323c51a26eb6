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

#include "ddlab/oracle.hpp"

#include <string>

#include "ddlab/error.hpp"

namespace ddlab {
namespace {

struct Cell {
  std::size_t a;
  std::size_t p;
  Rational d;
};

QuadrupleCounts count_pairs(const std::vector<Cell>& cells) {
  QuadrupleCounts out;
  for (std::size_t u = 0; u < cells.size(); ++u) {
    for (std::size_t v = 0; v < cells.size(); ++v) {
      if (u == v || cells[u].d != cells[v].d) continue;
      ++out.q;
      if (cells[u].p == cells[v].p) {
        ++out.q0;
      } else {
        ++out.q1;
      }
    }
  }
  return out;
}

void guard(std::size_t n, std::size_t m) {
  if (n * m > kQuadrupleOracleLimit) {
    throw Error(ErrorCode::kTooLarge,
                "quadruple oracle limited to n*m <= " +
                    std::to_string(kQuadrupleOracleLimit));
  }
}

}  // namespace

QuadrupleCounts oracle_quadruples(const Config& cfg) {
  guard(cfg.n(), cfg.m());
  std::vector<Cell> cells;
  for (std::size_t a = 0; a < cfg.n(); ++a) {
    for (std::size_t p = 0; p < cfg.m(); ++p) {
      Rational d;
      const Point& pt = cfg.p2()[p];
      for (std::size_t i = 0; i < pt.dim(); ++i) {
        Rational diff = i == 0 ? cfg.p1()[a] - pt[0] : pt[i];
        d += diff * diff;
      }
      cells.push_back({a, p, std::move(d)});
    }
  }
  return count_pairs(cells);
}

QuadrupleCounts oracle_quadruples(const SqDistMatrix& matrix) {
  guard(matrix.n, matrix.m);
  std::vector<Cell> cells;
  for (std::size_t a = 0; a < matrix.n; ++a) {
    for (std::size_t p = 0; p < matrix.m; ++p) {
      cells.push_back({a, p, matrix.at(a, p)});
    }
  }
  return count_pairs(cells);
}

std::uint64_t oracle_incidences(const GridPi& grid, const GammaSet& gamma) {
  const std::uint64_t work = static_cast<std::uint64_t>(grid.size()) *
                             static_cast<std::uint64_t>(gamma.curves.size());
  if (work > kIncidenceOracleLimit) {
    throw Error(ErrorCode::kTooLarge, "incidence oracle limited to n^2*|Gamma| <= 10^7");
  }
  std::uint64_t total = 0;
  for (const Hyperbola& h : gamma.curves) {
    // x^2 - y^2 + 2 alpha x - 2 beta y + alpha^2 - beta^2 + gamma
    const Rational lin_x = Rational(2) * h.alpha;
    const Rational lin_y = Rational(-2) * h.beta;
    const Rational k0 = h.alpha * h.alpha - h.beta * h.beta + h.gamma;
    for (const auto& x : grid.params) {
      for (const auto& y : grid.params) {
        if ((x * x - y * y + lin_x * x + lin_y * y + k0).is_zero()) ++total;
      }
    }
  }
  return total;
}

}  // namespace ddlab
