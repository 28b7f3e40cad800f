// Copyright 2026 The detmoments Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace detmoments {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws DomainError when den is zero.
Rational ratio(long num, long den = 1);

/// Parses "p/q", "p", "-3/4", and exact decimals such as "0.5" or "1e-20".
Rational parseRational(std::string_view text);

/// "p/q", or "p" when the denominator is 1. The sign sits on the numerator.
std::string toString(const Rational &q);

/// Decimal rendering with the given number of significant digits.
std::string toDecimal(const Rational &q, int digits);

bool isInteger(const Rational &q);
bool isNonPositiveInteger(const Rational &q);

/// Rising factorial x (x+1) ... (x+m-1), equal to 1 for m = 0.
Rational pochhammer(const Rational &x, long m);

/// base^exponent for any integer exponent (base must be nonzero if exponent < 0).
Rational power(const Rational &base, long exponent);

Integer binomial(long n, long k);

/// Converts an integral rational to long, throwing DomainError otherwise.
long toLong(const Rational &q);

} // namespace detmoments
