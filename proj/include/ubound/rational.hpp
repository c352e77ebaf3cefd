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

#ifndef UBOUND_RATIONAL_HPP_
#define UBOUND_RATIONAL_HPP_

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <string_view>

namespace ubound {

// Exact arbitrary-precision rational. GMP keeps results of arithmetic
// canonical (lowest terms, positive denominator); the constructors below must
// be used for raw num/den pairs so that invariant holds everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// High-precision float for the few quantities that are irrational
// (non-integer powers, log2): 50 decimal digits, ~166 mantissa bits.
using Real = boost::multiprecision::mpfr_float_50;

// num/den in lowest terms with positive denominator; throws
// std::domain_error when den == 0.
Rational make_rational(long num, long den);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts an integer ("3", "-2"), a fraction ("3/5"), or a decimal literal
// ("0.2" -> 1/5, ".25" -> 1/4). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view token);

Integer floor_rational(const Rational& q);
// q - floor(q), exact, in [0,1).
Rational fractional_part(const Rational& q);
bool is_integer(const Rational& q);
Rational pow_rational(const Rational& base, unsigned long exponent);

Real to_real(const Rational& q);
// base^exponent with the 0^p = 0 convention (exponent > 0 assumed).
Real pow_real(const Rational& base, const Rational& exponent);

// "54/55", "1/1", "-3/4" — the denominator is always written.
std::string fraction_string(const Rational& q);
// Decimal rendering to `significant` digits.
std::string decimal_string(const Rational& q, unsigned significant = 12);
std::string decimal_string(const Real& x, unsigned significant = 12);

}  // namespace ubound

#endif  // UBOUND_RATIONAL_HPP_
