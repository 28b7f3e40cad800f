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
#include "detmoments/utility.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace detmoments;

namespace {
const Rational half = ratio(1, 2);
}

TEST_CASE("R from determinant moments", "[utility]") {
    CHECK(rFromDetMoment(buresScenario(1))(0, 7) == 1);
    CHECK(rFromDetMoment(buresScenario(1))(1, 0) == ratio(1, 16896));
    CHECK(rFromDetMoment(buresScenario(half))(1, 0) == ratio(1, 8192));
}

TEST_CASE("R is multiplicative along k", "[utility]") {
    for (Scenario s : {buresScenario(half), hsScenario(1), qubitQutritScenario(1)}) {
        RModel r = rFromDetMoment(s);
        for (long n1 = 0; n1 <= 3; ++n1) {
            for (long n2 = 0; n2 <= 3; ++n2) {
                CHECK(r(n1 + n2, 2) == r(n1, 2) * r(n2, 2 + n1));
            }
        }
    }
}

TEST_CASE("Hilbert-Schmidt F2", "[utility]") {
    CHECK(f2HS(1)(0, 9) == 1);
    // Direct evaluation at alpha = 1: (1)(3/2)(-8) / (64 (17/4)(9/2)(19/4)).
    CHECK(f2HS(1)(1, 0) == ratio(-2, 969));
    CHECK(f2HS(half)(1, 0) == ratio(-11, 6864));
}

TEST_CASE("Bures F2 model", "[utility]") {
    CHECK(f2Bures(1)(1, 0) == f2BuresN1(1, 0));
    CHECK(f2Bures(half)(1, 5) == f2BuresN1(half, 5));
    CHECK_THROWS_AS(f2Bures(1)(2, 0), NotAvailable);
    CHECK_THROWS_AS(f2QQ(1)(2, 0), NotAvailable);
}

TEST_CASE("summations", "[utility]") {
    RModel r = rFromDetMoment(buresScenario(1));
    CHECK(pttSummation(f2HS(1), r, 0, 3) == 1);
    CHECK(pttSummation(f2Bures(1), r, 1, 0) == ratio(-1, 256));
    double hybrid = pttSummation(f2HS(1), r, 1, 0).get_d();
    CHECK(std::abs(hybrid + 0.0020048) < 1e-7);
    CHECK(hybridMoment(half, 1, 0) == ratio(-7095, 4792320));
}

TEST_CASE("weights equal one for n <= 1", "[utility]") {
    for (long k = 0; k <= 6; ++k) {
        CHECK(hybridMoment(1, 1, k) == hybridMomentLiteral(1, 1, k));
    }
    CHECK(hybridMoment(1, 2, 1) != hybridMomentLiteral(1, 2, 1));
}

TEST_CASE("hybrid series equals the weighted summation", "[utility]") {
    for (HybridVariant v : {HybridVariant::TwoQubitBures, HybridVariant::QubitQutrit}) {
        HybridSeries h = hybrid10F9(v, 1);
        CHECK(h.evaluate(0, 4) == 1);
        for (long n = 1; n <= 3; ++n) {
            for (long k = 1; k <= 3; ++k) {
                CHECK(h.evaluate(n, k) == h.summation(n, k));
            }
        }
    }
}

TEST_CASE("verification reports name the first failure", "[utility]") {
    VerificationReport r;
    r.add(1, 1, 0, 1, 1);
    r.add(1, 2, 3, 1, 2, "note");
    CHECK(!r.allEqual());
    CHECK(r.failures() == 1);
    REQUIRE(r.firstFailure() != nullptr);
    CHECK(r.firstFailure()->toLine() == "alpha=1 n=2 k=3 lhs=1 rhs=2 equal=false note=note");
}

TEST_CASE("8F12 candidate reproduces the first moments", "[utility]") {
    CHECK(verify8F12Reproduction(1, 0, 10).allEqual());
    CHECK(verify8F12Reproduction(half, 0, 10).allEqual());
}
