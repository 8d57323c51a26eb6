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

#include "ddlab/geometry.hpp"

namespace ddlab {

Rational rho_sq(const Point& p) {
  Rational s;
  for (std::size_t i = 1; i < p.dim(); ++i) s += p[i].square();
  return s;
}

Rational sq_dist(const Rational& a, const Point& p) {
  return sq_dist(a, p[0], rho_sq(p));
}

}  // namespace ddlab
