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

#include "detmoments/rational_function.hpp"

#include <utility>
#include <vector>

namespace detmoments {

using SamplePoint = std::pair<long, Rational>;

struct FitProblem {
    std::vector<SamplePoint> values;
    int numDegree = 0;
    int denDegree = 0;
    /// The fit r satisfies r(k + indexOffset) = v at every sample (k, v).
    long indexOffset = 0;
};

/// Rational function with deg num <= p and deg den <= q through every sample, from the
/// nullspace of v*Q(x) - P(x) = 0. Throws NoFit or AmbiguousFit.
RationalFunctionQ fitRational(const FitProblem &fp);

/// r(k + delta).
RationalFunctionQ shiftIndex(const RationalFunctionQ &r, long delta);

/// Smallest total degree first, then smaller denominator degree.
RationalFunctionQ autoFit(const std::vector<SamplePoint> &values, int maxTotalDegree);

/// (k, r(k)) for the first `count` integers k >= start that are not poles of r.
std::vector<SamplePoint> sampleFunction(const RationalFunctionQ &r, long start, long count);

} // namespace detmoments
