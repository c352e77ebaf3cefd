// Copyright 2026 The ubound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ubound/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ubound {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer integer_from_digits(std::string_view digits) {
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw std::invalid_argument("empty number");

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction '" + std::string(token) +
                                  "'");
    }
    Integer d = integer_from_digits(den);
    if (d == 0) {
      throw std::invalid_argument("zero denominator in '" +
                                  std::string(token) + "'");
    }
    value = make_rational(integer_from_digits(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal '" + std::string(token) +
                                  "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num = whole.empty() ? Integer(0) : integer_from_digits(whole);
    num = num * scale + integer_from_digits(frac);
    value = make_rational(num, scale);
  } else {
    if (!all_digits(body)) {
      throw std::invalid_argument("malformed number '" + std::string(token) +
                                  "'");
    }
    value = Rational(integer_from_digits(body));
  }
  if (negative) value = -value;
  return value;
}

Integer floor_rational(const Rational& q) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return result;
}

Rational fractional_part(const Rational& q) {
  return q - Rational(floor_rational(q));
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow_rational(const Rational& base, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  // A canonical base stays canonical under coordinatewise powers.
  Rational result(num, den);
  return result;
}

Real to_real(const Rational& q) { return Real(q.get_mpq_t()); }

Real pow_real(const Rational& base, const Rational& exponent) {
  if (base == 0) return Real(0);
  return pow(to_real(base), to_real(exponent));
}

std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, unsigned significant) {
  return decimal_string(to_real(q), significant);
}

std::string decimal_string(const Real& x, unsigned significant) {
  std::ostringstream out;
  out.precision(significant);
  out << x;
  return out.str();
}

}  // namespace ubound
