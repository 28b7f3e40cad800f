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

#include "detmoments/affine_form.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace detmoments {

/// pFq with affine parameters and an exact argument.
struct HyperSeries {
    std::vector<AffineForm> numerator;
    std::vector<AffineForm> denominator;
    Rational argument = 1;

    /// Structural equality, insensitive to the order within each list.
    friend bool operator==(const HyperSeries &a, const HyperSeries &b);
};

/// A series with every parameter bound to a rational.
struct BoundSeries {
    std::vector<Rational> numerator;
    std::vector<Rational> denominator;
    Rational argument = 1;
};

BoundSeries bind(const HyperSeries &s, const Bindings &b);

/// Smallest T with a numerator parameter equal to -T. Throws NotTerminating.
long terminationIndex(const BoundSeries &s);

/// Exact terminating sum up to the termination index. Throws NotTerminating
/// or PoleBeforeTermination.
Rational evaluateTerminating(const BoundSeries &s);
Rational evaluateTerminating(const HyperSeries &s, const Bindings &b);

/// Value of the series as a function of k, continued to the bound k.
///
/// Termination comes from k-free numerator parameters (such as -n). Factors
/// that vanish at the bound k are resolved as limits, so a terminating sum
/// whose parameters collide at integer k takes the value of its rational
/// continuation in k.
Rational evaluateKLimit(const HyperSeries &s, const Bindings &b);

/// Sum of denominator parameters minus sum of numerator parameters.
AffineForm balanceGap(const HyperSeries &s);

/// Number of alpha-bearing parameters in (numerator, denominator).
std::pair<int, int> alphaCount(const HyperSeries &s);

/// JSON text with "numerator", "denominator" (affine-form strings) and "argument".
std::string serialize(const HyperSeries &s);
HyperSeries parseHyperSeries(std::string_view text);

} // namespace detmoments
