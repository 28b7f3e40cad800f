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
#include "detmoments/hyper.hpp"
#include "detmoments/utility.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace detmoments;

TEST_CASE("simple terminating series", "[hyper]") {
    BoundSeries s{{-1, 1}, {2}, 1};
    CHECK(terminationIndex(s) == 1);
    CHECK(evaluateTerminating(s) == ratio(1, 2));
}

TEST_CASE("non-terminating and singular series are rejected", "[hyper]") {
    CHECK_THROWS_AS(evaluateTerminating(BoundSeries{{1, 1}, {2}, ratio(1, 2)}), NotTerminating);
    CHECK_THROWS_AS(evaluateTerminating(BoundSeries{{-3, 1}, {-1}, 1}), PoleBeforeTermination);
}

TEST_CASE("classical reduction of the HS series", "[hyper]") {
    Rational series = evaluateKLimit(hsSeries(), {0, 1, 1});
    CHECK(prefactor(hsScenario(0), 1, 1) * series == ratio(1, 495));
}

TEST_CASE("balance gaps", "[hyper]") {
    CHECK(balanceGap(hsSeries()) == AffineForm(1));
    CHECK(balanceGap(hybrid10F9(HybridVariant::TwoQubitBures, 1).series) == AffineForm(1));
    CHECK(balanceGap(hybrid10F9(HybridVariant::QubitQutrit, 1).series) == AffineForm(2, 9));
}

TEST_CASE("alpha counts", "[hyper]") {
    CHECK(alphaCount(hsSeries()) == std::pair{3, 2});
    CHECK(alphaCount(hybrid10F9(HybridVariant::TwoQubitBures, 1).series) == std::pair{7, 6});
    CHECK(alphaCount(hybrid10F9(HybridVariant::QubitQutrit, 1).series) == std::pair{8, 7});
}

TEST_CASE("hybrid series at n = 1 is a two-term sum", "[hyper]") {
    HybridSeries h = hybrid10F9(HybridVariant::TwoQubitBures, 1);
    BoundSeries b = bind(h.series, {1, 1, 1});
    CHECK(terminationIndex(b) == 1);
    Rational brute = 1;
    Rational term = b.argument;
    for (const auto &p : b.numerator) {
        term *= p;
    }
    for (const auto &q : b.denominator) {
        term /= q;
    }
    brute += term;
    CHECK(evaluateTerminating(b) == brute);
    CHECK(h.evaluate(1, 1) == hybridMoment(1, 1, 1));
}

TEST_CASE("serialization round-trips", "[hyper]") {
    for (const HyperSeries &s : {hsSeries(), trialSeries(), hybrid10F9(HybridVariant::QubitQutrit, 1).series}) {
        CHECK(parseHyperSeries(serialize(s)) == s);
    }
}
