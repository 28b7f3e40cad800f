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

#include "detmoments/affine_form.hpp"
#include "detmoments/errors.hpp"
#include "detmoments/polynomial.hpp"
#include "detmoments/rational.hpp"
#include "detmoments/rational_function.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace detmoments;

TEST_CASE("pochhammer symbols", "[rational]") {
    CHECK(pochhammer(ratio(1, 2), 0) == 1);
    CHECK(pochhammer(ratio(1, 2), 2) == ratio(3, 4));
    CHECK(pochhammer(ratio(-1, 4), 2) == ratio(-3, 16));
    CHECK(pochhammer(Rational(-3), 5) == 0);
}

TEST_CASE("pochhammer of affine forms", "[affine]") {
    AffineForm halfUp = AffineForm::alpha() + ratio(1, 2);
    CHECK(pochhammer(halfUp.bind({ratio(1, 2), 0, 0}), 1) == 1);
    CHECK(pochhammer((AffineForm::alpha() + Rational(1)).bind({1, 0, 0}), 2) == 6);
    AffineForm f = Rational(2) * AffineForm::k() + AffineForm::alpha() + Rational(1);
    CHECK(pochhammer(f.bind({1, 1, 0}), 2) == 20);
}

TEST_CASE("rational parsing and printing", "[rational]") {
    CHECK(parseRational("-2663/860160") == ratio(-2663, 860160));
    CHECK(parseRational("6/4") == ratio(3, 2));
    CHECK(toString(ratio(-6, 8)) == "-3/4");
    CHECK(toDecimal(ratio(-1, 256), 10) == "-0.00390625");
    CHECK_THROWS_AS(parseRational("1/0"), ParseError);
    CHECK_THROWS_AS(parseRational("abc"), ParseError);
}

TEST_CASE("affine forms parse and print", "[affine]") {
    AffineForm f = AffineForm::parse("-1 + -5*a + -2*k + -2*n");
    CHECK(f == AffineForm(-1, -5, -2, -2));
    CHECK(AffineForm::parse(f.toString()) == f);
    CHECK(f.bind({1, 0, 1}) == -8);
    CHECK_THROWS_AS(AffineForm::parse("-5a - 2k"), ParseError);
}

TEST_CASE("polynomial arithmetic", "[polynomial]") {
    PolynomialQ roots = PolynomialQ::fromLinearFactors({{3, 1}, {4, 1}, {5, 1}, {9, 4}, {11, 4}});
    CHECK(roots(0) == 5940);
    PolynomialQ p = PolynomialQ::fromDescending({8, 76, 142, -631, -2790, -2970});
    CHECK(p(0) == -2970);
    CHECK(PolynomialQ() + p == p);
    auto [q, r] = PolynomialQ::divmod(p * roots, roots);
    CHECK(q == p);
    CHECK(r.isZero());
    CHECK(p.shifted(1).shifted(-1) == p);
}

TEST_CASE("polynomial gcd is monic", "[polynomial]") {
    PolynomialQ a = PolynomialQ::fromLinearFactors({{1, 2}, {3, 1}});
    PolynomialQ b = PolynomialQ::fromLinearFactors({{1, 2}, {5, 1}});
    CHECK(PolynomialQ::gcd(a, b) == PolynomialQ::linear(ratio(1, 2), 1));
}

TEST_CASE("rational functions reduce to lowest terms", "[rational-function]") {
    PolynomialQ common = PolynomialQ::linear(3, 1);
    RationalFunctionQ r(common * PolynomialQ::linear(1, 1), common * PolynomialQ::linear(2, 1));
    CHECK(r.numeratorDegree() == 1);
    CHECK(r.denominatorDegree() == 1);
    CHECK(r(Rational(0)) == ratio(1, 2));
    CHECK(r.shifted(2).shifted(-2) == r);
    CHECK((r - r).numerator().isZero());
    CHECK_THROWS_AS(RationalFunctionQ(PolynomialQ::constant(1), PolynomialQ()), DomainError);
}
