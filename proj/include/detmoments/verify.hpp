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

#include "detmoments/utility.hpp"

#include <string>
#include <vector>

namespace detmoments {

struct SuiteOptions {
    /// n2-rebit: use the printed 2^12 denominator constant.
    bool paperLiteral = false;
    /// hybrid-10f9 and qq-hybrid: compare against the plain binomial summation.
    bool literal = false;
    /// Wider grids than the default sub-minute ones.
    bool full = false;
};

struct Check {
    std::string name;
    bool passed = false;
    std::size_t points = 0;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    const Check *firstFailure() const;
    std::string toJson() const;
};

std::vector<std::string> suiteNames();

/// Throws DomainError for an unknown suite name.
SuiteResult runSuite(const std::string &name, const SuiteOptions &opts = {});

/// The nested Horner form of the degree-10 n = 2 two-rebit numerator.
Rational buresRebitN2NumeratorHorner(const Rational &k);

} // namespace detmoments
