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

#include <iosfwd>
#include <string>
#include <variant>

#include "ddlab/bounds.hpp"
#include "ddlab/config.hpp"
#include "ddlab/configs.hpp"
#include "ddlab/energy.hpp"
#include "ddlab/reduction.hpp"

namespace ddlab {

// Config CSV:
//   k=<int>,c=<int>
//   P1,<rational>                 (n lines)
//   P2,<rational>,...,<rational>  (m lines, k values each)
// Blank lines and trailing '\r' are ignored. Throws Error(kParse).
Config read_config(std::istream& in);
void write_config(std::ostream& out, const Config& cfg);

// SqDistMatrix CSV:
//   n=<int>,m=<int>
//   <rational>,...,<rational>     (n lines, m values each)
SqDistMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const SqDistMatrix& matrix);

// Dispatches on the header line ("k=" or "n=").
using Input = std::variant<Config, SqDistMatrix>;
Input read_input(std::istream& in);
Input read_input_file(const std::string& path);

// One line per curve: p_idx,q_idx,alpha,beta,gamma
void write_gamma_csv(std::ostream& out, const GammaSet& gamma);

std::string to_json(const EnergyReport& report, int indent = -1);
std::string to_json(const BoundReport& report, int indent = -1);
std::string to_json(const IncidenceReport& report, int indent = -1);

}  // namespace ddlab
