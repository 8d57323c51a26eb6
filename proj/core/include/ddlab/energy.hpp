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
#include <span>
#include <utility>
#include <vector>

#include "ddlab/config.hpp"
#include "ddlab/configs.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

struct PairIndex {
  std::uint32_t p1;  // index into the sorted P1 parameters
  std::uint32_t p2;  // index into P2

  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

/// All n*m (P1, P2) pairs grouped by exact squared distance.
///
/// Stored compactly: class i has squared distance keys[i] and owns
/// pairs[offsets[i], offsets[i+1]). Classes are in ascending key order and
/// pairs inside a class are in ascending (p1, p2) order, so the value does
/// not depend on how the grouping work was partitioned.
class DistanceClasses {
 public:
  DistanceClasses(std::size_t n, std::size_t m, std::vector<Rational> keys,
                  std::vector<std::size_t> offsets,
                  std::vector<PairIndex> pairs);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t size() const { return keys_.size(); }  // x
  const Rational& key(std::size_t i) const { return keys_[i]; }
  std::size_t class_size(std::size_t i) const {
    return offsets_[i + 1] - offsets_[i];
  }
  std::span<const PairIndex> members(std::size_t i) const {
    return {pairs_.data() + offsets_[i], class_size(i)};
  }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<Rational> keys_;
  std::vector<std::size_t> offsets_;
  std::vector<PairIndex> pairs_;
};

// Worker count for bulk operations: DDLAB_THREADS if set (>= 1), else the
// hardware concurrency.
unsigned default_workers();

enum class GroupingPath {
  kAuto,          // int64 keys when every input value is a small integer
  kRationalOnly,  // always hash the exact rationals
};

// Both paths produce identical DistanceClasses.
DistanceClasses distance_classes(const Config& cfg,
                                 unsigned workers = default_workers(),
                                 GroupingPath path = GroupingPath::kAuto);
DistanceClasses distance_classes(const SqDistMatrix& matrix,
                                 unsigned workers = default_workers(),
                                 GroupingPath path = GroupingPath::kAuto);

struct EnergyReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t x = 0;
  std::uint64_t q = 0;
  std::uint64_t q0 = 0;
  std::uint64_t q1 = 0;
  // (class size, number of classes with that size), ascending by size.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram;
};

EnergyReport energy(const DistanceClasses& classes);

enum class LowerBoundStatus {
  kHolds,
  kFails,
  kNotApplicable,  // x > nm/2
  kDivisionGuard,  // Q == 0: x == nm and the bound is vacuous
};

struct ChainReport {
  bool cauchy_schwarz = false;  // x*Q >= (nm - x)^2
  bool x_at_most_half = false;  // 2x <= nm
  LowerBoundStatus lower_bound = LowerBoundStatus::kNotApplicable;  // 4xQ >= (nm)^2
  Integer slack;                // x*Q - (nm - x)^2
  bool q0_within_nm = false;    // Q0 <= nm

  bool ok() const {
    return cauchy_schwarz && q0_within_nm &&
           lower_bound != LowerBoundStatus::kFails;
  }
};

ChainReport check_chain(const EnergyReport& report, std::size_t n,
                        std::size_t m);

}  // namespace ddlab
