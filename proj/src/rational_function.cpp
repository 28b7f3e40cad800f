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

#include "detmoments/rational_function.hpp"

#include "detmoments/errors.hpp"

namespace detmoments {

RationalFunctionQ::RationalFunctionQ() : num_(), den_(PolynomialQ::constant(1)) {}

RationalFunctionQ::RationalFunctionQ(PolynomialQ num, PolynomialQ den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RationalFunctionQ::RationalFunctionQ(PolynomialQ poly)
    : num_(std::move(poly)), den_(PolynomialQ::constant(1)) {}

RationalFunctionQ RationalFunctionQ::constant(const Rational &c) {
    return RationalFunctionQ(PolynomialQ::constant(c));
}

void RationalFunctionQ::normalize() {
    if (den_.isZero()) {
        throw DomainError("rational function with zero denominator");
    }
    if (num_.isZero()) {
        den_ = PolynomialQ::constant(1);
        return;
    }
    PolynomialQ g = PolynomialQ::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = PolynomialQ::divmod(num_, g).first;
        den_ = PolynomialQ::divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RationalFunctionQ::operator()(const Rational &x) const {
    Rational d = den_(x);
    if (d == 0) {
        throw DomainError("evaluation at a pole, x = " + detmoments::toString(x));
    }
    return num_(x) / d;
}

RationalFunctionQ RationalFunctionQ::shifted(const Rational &delta) const {
    return RationalFunctionQ(num_.shifted(delta), den_.shifted(delta));
}

RationalFunctionQ RationalFunctionQ::operator-() const {
    RationalFunctionQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunctionQ operator+(const RationalFunctionQ &a, const RationalFunctionQ &b) {
    if (a.den_ == b.den_) {
        return RationalFunctionQ(a.num_ + b.num_, a.den_);
    }
    return RationalFunctionQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionQ operator-(const RationalFunctionQ &a, const RationalFunctionQ &b) { return a + (-b); }

RationalFunctionQ operator*(const RationalFunctionQ &a, const RationalFunctionQ &b) {
    return RationalFunctionQ(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunctionQ operator/(const RationalFunctionQ &a, const RationalFunctionQ &b) {
    if (b.num_.isZero()) {
        throw DomainError("division by the zero rational function");
    }
    return RationalFunctionQ(a.num_ * b.den_, a.den_ * b.num_);
}

std::pair<PolynomialQ, PolynomialQ> RationalFunctionQ::integerForm() const {
    Integer l = 1;
    Integer ln = num_.denominatorLcm();
    Integer ld = den_.denominatorLcm();
    mpz_lcm(l.get_mpz_t(), ln.get_mpz_t(), ld.get_mpz_t());
    PolynomialQ n = num_ * Rational(l);
    PolynomialQ d = den_ * Rational(l);
    Integer g = 0;
    Integer cn = n.integerContent();
    Integer cd = d.integerContent();
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g > 1) {
        Rational inv(Integer(1), g);
        n *= inv;
        d *= inv;
    }
    return {n, d};
}

std::string RationalFunctionQ::toString(const std::string &var) const {
    auto [n, d] = integerForm();
    if (d.degree() == 0 && d.coefficient(0) == 1) {
        return n.toString(var);
    }
    return "(" + n.toString(var) + ")/(" + d.toString(var) + ")";
}

} // namespace detmoments
