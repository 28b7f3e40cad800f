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
#include "detmoments/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace detmoments;

TEST_CASE("default suites pass", "[verify]") {
    for (const auto &name : suiteNames()) {
        SuiteResult r = runSuite(name);
        INFO(name << ": " << (r.firstFailure() ? r.firstFailure()->detail : ""));
        CHECK(r.passed());
        CHECK(!r.checks.empty());
    }
}

TEST_CASE("plain binomial summation is not the hybrid series", "[verify]") {
    SuiteOptions opts;
    opts.literal = true;
    SuiteResult r = runSuite("hybrid-10f9", opts);
    REQUIRE(r.firstFailure() != nullptr);
    CHECK(r.firstFailure()->detail.find("alpha=1/2 n=2 k=1") != std::string::npos);
}

TEST_CASE("printed n = 2 constant is off by 1024", "[verify]") {
    SuiteOptions opts;
    opts.paperLiteral = true;
    SuiteResult r = runSuite("n2-rebit", opts);
    CHECK(!r.passed());
    CHECK(r.firstFailure()->detail.find("constant factor 1024") != std::string::npos);
}

TEST_CASE("Horner form of the n = 2 numerator", "[verify]") {
    PolynomialQ num = catalog::buresRebitN2Numerator();
    for (long k = 0; k <= 20; ++k) {
        CHECK(num(Rational(k)) == buresRebitN2NumeratorHorner(k));
    }
}

TEST_CASE("unknown suite", "[verify]") { CHECK_THROWS_AS(runSuite("nope"), DomainError); }
