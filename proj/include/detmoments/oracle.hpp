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

#include "detmoments/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace detmoments {

using Spectrum = std::array<double, 4>;

/// Eigenvalue labelling under which the Bures density integrates to one.
enum class Convention { Unordered, Ordered };

std::string toString(Convention c);

struct QuadSpec {
    /// Relative tolerance of the reported value.
    double tolerance = 1e-8;
};

struct MonomialTerm {
    Rational coefficient;
    std::array<int, 4> exponents{};
};

struct OracleResult {
    std::string integrand;
    long k = 0;
    double value = 0;
    double estError = 0;
    long cells = 0;
    Convention convention = Convention::Unordered;

    std::string toJson() const;
};

/// (128/pi) prod_{i<j} (|l_i - l_j|^2/(l_i + l_j))^alpha / sqrt(prod l_i).
double densityValue(const Spectrum &lambda, double alpha);

/// Integral of the density over the unordered simplex, computed on the ordered
/// sector l1 <= l2 <= l3 <= l4 and multiplied by 4!.
OracleResult normalization(double alpha, const QuadSpec &spec = {});

/// Fixes the convention from the normalization: unordered if the full simplex
/// carries unit mass, ordered if the sector alone does.
Convention detectConvention(double alpha, const QuadSpec &spec = {});

/// <sum_t c_t l^e_t (l1 l2 l3 l4)^k> over the unordered simplex.
OracleResult expectPolynomial(const std::vector<MonomialTerm> &poly, long k, double alpha, const QuadSpec &spec,
                              const std::string &label);
OracleResult expectMonomial(const std::array<int, 4> &exponents, long k, double alpha = 0.5,
                            const QuadSpec &spec = {});

/// The fifteen-monomial polynomial whose expectation times |rho|^k gives <|rho^PT|^2 |rho|^k>
/// for Bures two-rebits.
const std::vector<MonomialTerm> &ptSquaredPolynomial();
/// Its first three monomials, l4^8/576 + l3 l4^7/252 - 103 l3^2 l4^6/8400.
const std::vector<MonomialTerm> &firstThreePolynomial();

OracleResult expectPtSquared(long k, const QuadSpec &spec = {});
OracleResult expectFirstThree(long k, const QuadSpec &spec = {});

/// Exact remainder: -4^(-4k-13) (-1/4)_{k+1} (1/4)_{k+1} S(k) /
/// [3472875 (k+2)(k+3)(2k+1)(2k+3)(2k+5) (3)_{k+1} (11/2)_{k+1}].
Rational closedTermN2(long k);
/// firstThree + closedTermN2(k).
Rational assembleN2(long k, const Rational &firstThree);
double assembleN2(long k, double firstThree);

} // namespace detmoments
