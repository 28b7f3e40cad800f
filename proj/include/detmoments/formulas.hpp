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

#include "detmoments/hyper.hpp"
#include "detmoments/rational_function.hpp"

#include <array>
#include <string>
#include <vector>

namespace detmoments {

enum class Family { GeneralizedTwoQubit, QubitQutrit };
enum class Measure { HilbertSchmidt, Bures };

struct Scenario {
    Family family = Family::GeneralizedTwoQubit;
    Measure measure = Measure::HilbertSchmidt;
    Rational alpha = 1;

    /// Throws DomainError for negative alpha, UnsupportedScenario for qubit-qutrit Bures.
    void validate() const;
};

Scenario buresScenario(const Rational &alpha);
Scenario hsScenario(const Rational &alpha);
Scenario qubitQutritScenario(const Rational &alpha);

/// True when alpha lies outside the values the moment formulas were checked for
/// (1/2 and 1 for Bures; any alpha is native for Hilbert-Schmidt).
bool isExtrapolated(const Scenario &s);

/// One factor (base + multiplier*k)_{multiplier*n} of a determinant moment formula.
struct PochhammerFactor {
    Rational base;
    long multiplier = 1;
};

/// <|rho|^k> = geometric^k * prod num (base)_{m k} / prod den (base)_{m k}.
struct DetMomentFormula {
    Rational geometric = 1;
    std::vector<PochhammerFactor> numerator;
    std::vector<PochhammerFactor> denominator;
};

DetMomentFormula detMomentFormula(const Scenario &s);

/// <|rho|^k> for a nonnegative integer k.
Rational detMoment(const Scenario &s, const Rational &k);

/// Moment ratio <|rho|^(n+k)>/<|rho|^k> in Pochhammer form, valid for rational k.
Rational prefactor(const Scenario &s, long n, const Rational &k);

/// <|rho^PT| |rho|^k>/<|rho|^k> for Bures, alpha in {1/2, 1}.
Rational buresRatioN1(const Rational &alpha, const Rational &k);
Rational buresRatioN1(const Scenario &s, const Rational &k);

/// Hilbert-Schmidt ratio <|rho^PT|^n |rho|^k>/<|rho|^k> as prefactor times 5F4.
Rational hsRatio(const Rational &alpha, long n, const Rational &k);

/// alpha = 0 reductions at n = 1.
Rational classicalRatio(Measure m, const Rational &k);

/// Bures trial expression: prefactor times 6F5.
Rational trialBuresRatio(const Rational &alpha, long n, const Rational &k);

Rational jointJ(const Rational &alpha, const Rational &k);

/// Bures F2(1,k) from J: prefactor * J minus R(1,k).
Rational f2BuresN1(const Rational &alpha, const Rational &k);

Rational numAlpha(const Rational &alpha, const Rational &k);
Rational denAlpha(const Rational &alpha, const Rational &k);

/// Qubit-qutrit Hilbert-Schmidt n = 1 ratios, alpha in {1/2, 1}.
Rational qqRatioN1(const Rational &alpha, const Rational &k);
Rational qqSimplifiedN1(const Rational &alpha, const Rational &k);
Rational f2QQN1(const Rational &alpha, const Rational &k);

/// (num(alpha) at k+n-1)_n over 2^(7n) times the six (den factor)_n.
Rational candidateF2_8F12(const Rational &alpha, long n, const Rational &k);

enum class N2Constant { Corrected, PaperLiteral };

/// Bures two-rebit <|rho^PT|^2 |rho|^k>/<|rho|^k>.
Rational buresRebitN2Ratio(const Rational &k, N2Constant c = N2Constant::Corrected);
RationalFunctionQ buresRebitN2Function(N2Constant c = N2Constant::Corrected);

HyperSeries hsSeries();
HyperSeries trialSeries();

/// The 8F12 with its quartic numerator term kept as a multivariate polynomial.
struct QuarticTerm {
    Rational coefficient;
    int alphaPower = 0;
    int kPower = 0;
    int nPower = 0;
};

struct EightF12Candidate {
    std::vector<AffineForm> affineNumerator;
    std::vector<QuarticTerm> quartic;
    std::vector<AffineForm> denominator;
    Rational argument;

    Rational quarticValue(const Bindings &b) const;
    /// All eight numerator parameters and the twelve denominator parameters, bound.
    BoundSeries bind(const Bindings &b) const;
};

EightF12Candidate eightF12Candidate();

namespace catalog {

struct Entry {
    std::string name;
    RationalFunctionQ function;
};

RationalFunctionQ legacyQubitN1();        // original two-qubit fit, pre-correction
RationalFunctionQ legacyRebitN1();        // original two-rebit fit, pre-correction
RationalFunctionQ buresQubitN1();         // alpha = 1
RationalFunctionQ buresRebitN1();         // alpha = 1/2
RationalFunctionQ hsClassical();
RationalFunctionQ buresClassical();
RationalFunctionQ trialQubitN1();
RationalFunctionQ trialRebitN1();
RationalFunctionQ f2Complex();
RationalFunctionQ f2Real();
RationalFunctionQ rebitRetritN1();
RationalFunctionQ qubitQutritN1();
RationalFunctionQ rebitRetritSimplified();
RationalFunctionQ qubitQutritSimplified();
RationalFunctionQ f2RebitRetrit();
RationalFunctionQ f2QubitQutrit();
RationalFunctionQ hybridQubitN1();
RationalFunctionQ hybridRebitN1();
/// Degree-10 numerator of the n = 2 two-rebit ratio.
PolynomialQ buresRebitN2Numerator();

std::vector<Entry> all();

} // namespace catalog

} // namespace detmoments
