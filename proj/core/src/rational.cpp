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

#include "ddlab/rational.hpp"

#include <string>

#include "ddlab/error.hpp"

namespace ddlab {
namespace {

bool valid_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_mpz(mpz_srcptr z, std::size_t h) {
  std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z, i)));
  }
  return mix(h, static_cast<std::size_t>(mpz_sgn(z) + 1));
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::kInvalidInput, "rational with zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  bool ok = valid_integer_literal(num, true) &&
            (slash == std::string_view::npos || valid_integer_literal(den, false));
  if (!ok) {
    throw Error(ErrorCode::kParse,
                "malformed rational literal '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d = slash == std::string_view::npos ? Integer(1)
                                              : Integer(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kParse,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidInput, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const noexcept {
  std::size_t h = hash_mpz(mpq_numref(v_.get_mpq_t()), 0);
  return hash_mpz(mpq_denref(v_.get_mpq_t()), h);
}

bool exact_sqrt(const Rational& r, Rational* root) {
  if (r.sign() < 0) return false;
  Integer num = r.numerator();
  Integer den = r.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return false;
  }
  if (root != nullptr) {
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    *root = Rational(sn, sd);
  }
  return true;
}

}  // namespace ddlab
