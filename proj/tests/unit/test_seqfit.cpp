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
#include "detmoments/seqfit.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace detmoments;

TEST_CASE("reciprocal sequence", "[seqfit]") {
    std::vector<SamplePoint> values;
    for (long k = 1; k <= 6; ++k) {
        values.emplace_back(k, ratio(1, k));
    }
    RationalFunctionQ r = fitRational({values, 0, 1, 0});
    CHECK(r == RationalFunctionQ(PolynomialQ::constant(1), PolynomialQ::linear(0, 1)));
}

TEST_CASE("fixed-degree fit of a catalog entry", "[seqfit]") {
    RationalFunctionQ target = catalog::buresRebitN1();
    RationalFunctionQ r = fitRational({sampleFunction(target, 0, 12), 5, 5, 0});
    CHECK(r == target);
}

TEST_CASE("index offset recovers the pre-correction fit", "[seqfit]") {
    RationalFunctionQ fixed = catalog::buresQubitN1();
    std::vector<SamplePoint> values;
    for (long k = 1; k <= 12; ++k) {
        values.emplace_back(k - 1, fixed(Rational(k - 1)));
    }
    RationalFunctionQ plain = fitRational({values, 5, 5, 0});
    RationalFunctionQ offset = fitRational({values, 5, 5, 1});
    CHECK(plain == fixed);
    CHECK(offset == catalog::legacyQubitN1());
}

TEST_CASE("index shifts", "[seqfit]") {
    RationalFunctionQ legacy = catalog::legacyQubitN1();
    CHECK(shiftIndex(legacy, 1) == catalog::buresQubitN1());
    CHECK(shiftIndex(legacy, 0) == legacy);
    CHECK(shiftIndex(shiftIndex(legacy, 1), -1) == legacy);
}

TEST_CASE("automatic degree search", "[seqfit]") {
    std::vector<SamplePoint> fives;
    for (long k = 0; k < 4; ++k) {
        fives.emplace_back(k, 5);
    }
    CHECK(autoFit(fives, 4) == RationalFunctionQ::constant(5));
    CHECK(autoFit(sampleFunction(catalog::f2Real(), 0, 14), 12) == catalog::f2Real());
    CHECK(autoFit(sampleFunction(catalog::buresClassical(), 0, 10), 12) == catalog::buresClassical());
}

TEST_CASE("every low-degree catalog entry round-trips", "[seqfit]") {
    for (const auto &e : catalog::all()) {
        int total = e.function.numeratorDegree() + e.function.denominatorDegree();
        if (total > 12) {
            continue;
        }
        INFO(e.name);
        auto samples = sampleFunction(e.function, 0, total + 2);
        CHECK(autoFit(samples, 12) == e.function);
    }
}

TEST_CASE("fits do not depend on sample order", "[seqfit]") {
    auto samples = sampleFunction(catalog::trialRebitN1(), 0, 12);
    std::mt19937 rng(7);
    std::shuffle(samples.begin(), samples.end(), rng);
    CHECK(fitRational({samples, 5, 5, 0}) == catalog::trialRebitN1());
}

TEST_CASE("fit failures", "[seqfit]") {
    auto samples = sampleFunction(catalog::buresQubitN1(), 0, 12);
    CHECK_THROWS_AS(fitRational({samples, 2, 2, 0}), NoFit);
    CHECK_THROWS_AS(fitRational({samples, 8, 8, 0}), DomainError);
    CHECK_THROWS_AS(autoFit(samples, 6), NoFit);
}
