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

#include "detmoments/polynomial.hpp"

#include <string>

namespace detmoments {

/// Reduced quotient of polynomials. Common factors are cancelled and the
/// denominator is kept monic, so equal functions compare equal.
class RationalFunctionQ {
  public:
    RationalFunctionQ();
    RationalFunctionQ(PolynomialQ num, PolynomialQ den);
    explicit RationalFunctionQ(PolynomialQ poly);

    static RationalFunctionQ constant(const Rational &c);

    const PolynomialQ &numerator() const { return num_; }
    const PolynomialQ &denominator() const { return den_; }

    bool isPole(const Rational &x) const { return den_(x) == 0; }
    /// Throws DomainError at a pole.
    Rational operator()(const Rational &x) const;

    /// r(x + delta), re-expanded and reduced.
    RationalFunctionQ shifted(const Rational &delta) const;

    RationalFunctionQ operator-() const;
    friend RationalFunctionQ operator+(const RationalFunctionQ &a, const RationalFunctionQ &b);
    friend RationalFunctionQ operator-(const RationalFunctionQ &a, const RationalFunctionQ &b);
    friend RationalFunctionQ operator*(const RationalFunctionQ &a, const RationalFunctionQ &b);
    friend RationalFunctionQ operator/(const RationalFunctionQ &a, const RationalFunctionQ &b);
    friend bool operator==(const RationalFunctionQ &a, const RationalFunctionQ &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    int numeratorDegree() const { return num_.degree(); }
    int denominatorDegree() const { return den_.degree(); }

    /// Numerator and denominator scaled to coprime integer coefficients with a
    /// positive leading denominator coefficient.
    std::pair<PolynomialQ, PolynomialQ> integerForm() const;

    /// "(P(k))/(Q(k))" with expanded integer-coefficient polynomials.
    std::string toString(const std::string &var = "k") const;

  private:
    void normalize();
    PolynomialQ num_;
    PolynomialQ den_;
};

} // namespace detmoments
