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

#include "detmoments/errors.hpp"
#include "detmoments/formulas.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace detmoments;

namespace {
const Rational half = ratio(1, 2);
}

TEST_CASE("determinant moments", "[formulas]") {
    CHECK(detMoment(buresScenario(half), 0) == 1);
    CHECK(detMoment(buresScenario(half), 1) == ratio(1, 8192));
    CHECK(detMoment(qubitQutritScenario(1), 1) == ratio(1, 4496388));
    CHECK(detMoment(buresScenario(1), 1) == ratio(1, 16896));
}

TEST_CASE("scenario validation", "[formulas]") {
    Scenario s = qubitQutritScenario(1);
    s.measure = Measure::Bures;
    CHECK_THROWS_AS(s.validate(), UnsupportedScenario);
    CHECK_THROWS_AS(buresScenario(-1).validate(), DomainError);
}

TEST_CASE("prefactors", "[formulas]") {
    CHECK(prefactor(buresScenario(1), 0, 3) == 1);
    CHECK(prefactor(qubitQutritScenario(half), 1, 0) == ratio(63, 132612480));
    // Equal to the k = 1 determinant moment, as the n = 1 prefactor must be.
    CHECK(prefactor(buresScenario(1), 1, 0) == ratio(1, 16896));
}

TEST_CASE("first-moment ratios", "[formulas]") {
    CHECK(buresRatioN1(Rational(1), Rational(0)) == ratio(-1, 256));
    CHECK(buresRatioN1(half, Rational(0)) == ratio(-2663, 860160));
    // Coefficient sums of the qubit polynomials: -6165/2995200.
    CHECK(buresRatioN1(Rational(1), Rational(1)) == ratio(-137, 66560));
}

TEST_CASE("Hilbert-Schmidt ratios", "[formulas]") {
    CHECK(hsRatio(0, 1, 2) == ratio(9, 3640));
    CHECK(hsRatio(ratio(3, 2), 0, 5) == 1);
    CHECK(classicalRatio(Measure::HilbertSchmidt, 0) == ratio(1, 840));
    CHECK(classicalRatio(Measure::Bures, 0) == ratio(1, 1920));
    CHECK(classicalRatio(Measure::Bures, 1) == ratio(3, 1792));
}

TEST_CASE("trial ratios", "[formulas]") {
    CHECK(trialBuresRatio(1, 1, 0) == ratio(-1467, 760320));
    CHECK(trialBuresRatio(half, 1, 0) == ratio(-1095, 860160));
    CHECK(trialBuresRatio(0, 1, 3) == ratio(343, 128 * 4 * 15 * 17));
}

TEST_CASE("joint J and the F2 closed forms", "[formulas]") {
    CHECK(jointJ(1, 0) == -66);
    CHECK(jointJ(half, 0) == ratio(-2663, 105));
    CHECK(jointJ(1, 1) * prefactor(buresScenario(1), 1, 1) == buresRatioN1(Rational(1), Rational(1)));
    CHECK(f2BuresN1(1, 0) == ratio(-3015, 760320));
    CHECK(f2BuresN1(half, 0) == ratio(-173, 53760));
    CHECK(numAlpha(half, 0) == -173);
    CHECK(denAlpha(half, 0) == 53760);
    CHECK(numAlpha(1, 0) == -3015);
}

TEST_CASE("qubit-qutrit forms", "[formulas]") {
    CHECK(qqSimplifiedN1(half, 0) == -13);
    CHECK(qqSimplifiedN1(1, 0) == -32);
    CHECK(qqRatioN1(half, 0) == ratio(-1170, 189446400));
    CHECK(f2QQN1(half, 0) == ratio(-7, 1052480));
    CHECK(f2QQN1(1, 0) == ratio(11, 1498796));
}

TEST_CASE("printed qubit-qutrit F2 at alpha = 1 is inconsistent", "[formulas]") {
    // The identity ratio = prefactor + F2 holds at alpha = 1/2 and fails for the printed alpha = 1 form.
    Scenario s = qubitQutritScenario(1);
    for (long k = 0; k <= 5; ++k) {
        Rational consistent = qqRatioN1(1, k) - prefactor(s, 1, k);
        Rational kk = k;
        Rational expected = -(kk + 3) * (kk + 5) * (2 * kk + 11) /
                            (3 * (2 * kk + 13) * (3 * kk + 19) * (3 * kk + 20) * (6 * kk + 37) * (6 * kk + 41));
        CHECK(consistent == expected);
        CHECK(f2QQN1(1, k) != consistent);
    }
    CHECK(f2QQN1(1, 0) == -(qqRatioN1(1, 0) - prefactor(s, 1, 0)));
}

TEST_CASE("n = 2 two-rebit ratio", "[formulas]") {
    CHECK(buresRebitN2Ratio(0) == parseRational("50654227/1307993702400"));
    CHECK(buresRebitN2Ratio(1) * detMoment(buresScenario(half), 1) == parseRational("11395427/9630347469783040"));
    CHECK(buresRebitN2Ratio(0, N2Constant::PaperLiteral) == parseRational("303925362/7664025600"));
    CHECK(buresRebitN2Ratio(0, N2Constant::PaperLiteral) == 1024 * buresRebitN2Ratio(0));
    RationalFunctionQ f = buresRebitN2Function();
    CHECK(f.numeratorDegree() == 10);
    CHECK(f.denominatorDegree() == 10);
}

TEST_CASE("catalog entries are reduced and labelled", "[formulas]") {
    auto entries = catalog::all();
    REQUIRE(entries.size() >= 18);
    for (const auto &e : entries) {
        INFO(e.name);
        CHECK(!e.name.empty());
        CHECK(PolynomialQ::gcd(e.function.numerator(), e.function.denominator()).degree() == 0);
    }
    CHECK(catalog::buresQubitN1()(Rational(0)) == ratio(-1, 256));
    CHECK(catalog::hsClassical()(Rational(0)) == ratio(1, 840));
}
