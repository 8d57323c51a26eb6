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

#include "ddlab/config.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ddlab/error.hpp"

namespace ddlab {

Config::Config(int k, int c, std::vector<Rational> p1, std::vector<Point> p2)
    : k_(k), c_(c), p1_(std::move(p1)), p2_(std::move(p2)) {
  if (k_ < 2) {
    throw Error(ErrorCode::kInvalidInput,
                "dimension must be >= 2, got " + std::to_string(k_));
  }
  if (c_ < 1) {
    throw Error(ErrorCode::kInvalidInput,
                "constraint constant must be >= 1, got " + std::to_string(c_));
  }
  std::sort(p1_.begin(), p1_.end());
  auto dup = std::adjacent_find(p1_.begin(), p1_.end());
  if (dup != p1_.end()) {
    throw Error(ErrorCode::kInvalidInput,
                "repeated P1 parameter " + dup->to_string());
  }
  for (std::size_t j = 0; j < p2_.size(); ++j) {
    if (p2_[j].dim() != static_cast<std::size_t>(k_)) {
      throw Error(ErrorCode::kInvalidInput,
                  "P2 point " + std::to_string(j) + " has " +
                      std::to_string(p2_[j].dim()) + " coordinates, expected " +
                      std::to_string(k_));
    }
  }
}

bool ValidationReport::hyperplane_ok() const {
  return std::none_of(violations.begin(), violations.end(), [](const auto& v) {
    return v.constraint == Constraint::kHyperplane;
  });
}

bool ValidationReport::cylinder_ok() const {
  return std::none_of(violations.begin(), violations.end(), [](const auto& v) {
    return v.constraint == Constraint::kCylinder;
  });
}

ValidationReport validate_constraints(const Config& cfg) {
  return validate_constraints(cfg, cfg.c());
}

ValidationReport validate_constraints(const Config& cfg, int bound) {
  std::map<Rational, std::vector<std::size_t>> by_p1;
  std::map<Rational, std::vector<std::size_t>> by_rho;
  for (std::size_t j = 0; j < cfg.m(); ++j) {
    by_p1[cfg.p2()[j][0]].push_back(j);
    by_rho[rho_sq(cfg.p2()[j])].push_back(j);
  }
  ValidationReport report;
  report.bound = bound;
  auto collect = [&](Constraint kind, auto& groups) {
    for (auto& [t, idx] : groups) {
      if (idx.size() > static_cast<std::size_t>(bound)) {
        report.violations.push_back({kind, t, std::move(idx)});
      }
    }
  };
  collect(Constraint::kHyperplane, by_p1);
  collect(Constraint::kCylinder, by_rho);
  return report;
}

}  // namespace ddlab
