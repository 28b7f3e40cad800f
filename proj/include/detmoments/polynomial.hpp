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

#include "detmoments/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace detmoments {

/// Univariate polynomial with exact rational coefficients, stored in ascending degree.
class PolynomialQ {
  public:
    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<Rational> ascending);

    static PolynomialQ constant(const Rational &c);
    /// a + b*x
    static PolynomialQ linear(const Rational &a, const Rational &b);
    /// Coefficients listed from the highest degree down, as printed in formulas.
    static PolynomialQ fromDescending(std::initializer_list<long> coefficients);
    /// Product of (a_i + b_i x) over the given (a_i, b_i).
    static PolynomialQ fromLinearFactors(const std::vector<std::pair<Rational, Rational>> &factors);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    Rational coefficient(int i) const;
    const std::vector<Rational> &coefficients() const { return c_; }
    Rational leading() const;

    Rational operator()(const Rational &x) const;

    PolynomialQ operator-() const;
    PolynomialQ &operator+=(const PolynomialQ &o);
    PolynomialQ &operator-=(const PolynomialQ &o);
    PolynomialQ &operator*=(const PolynomialQ &o);
    PolynomialQ &operator*=(const Rational &s);

    friend PolynomialQ operator+(PolynomialQ a, const PolynomialQ &b) { return a += b; }
    friend PolynomialQ operator-(PolynomialQ a, const PolynomialQ &b) { return a -= b; }
    friend PolynomialQ operator*(PolynomialQ a, const PolynomialQ &b) { return a *= b; }
    friend PolynomialQ operator*(PolynomialQ a, const Rational &s) { return a *= s; }
    friend PolynomialQ operator*(const Rational &s, PolynomialQ a) { return a *= s; }
    friend bool operator==(const PolynomialQ &a, const PolynomialQ &b) { return a.c_ == b.c_; }

    /// Quotient and remainder of a / b.
    static std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ &a, const PolynomialQ &b);
    /// Monic greatest common divisor (zero if both inputs are zero).
    static PolynomialQ gcd(PolynomialQ a, PolynomialQ b);

    PolynomialQ monic() const;
    /// p(x + delta)
    PolynomialQ shifted(const Rational &delta) const;
    PolynomialQ power(unsigned e) const;

    /// Least common multiple of coefficient denominators.
    Integer denominatorLcm() const;
    /// Gcd of numerators after scaling by denominatorLcm().
    Integer integerContent() const;

    /// Expanded form such as "8*k^5 + 76*k^4 - 2970".
    std::string toString(const std::string &var = "k") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace detmoments
