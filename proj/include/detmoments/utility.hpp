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

#include "detmoments/formulas.hpp"

#include <functional>
#include <string>
#include <vector>

namespace detmoments {

/// F2(n,k) = <|rho|^k (|rho^PT| - |rho|)^n> / <|rho|^k>
struct F2Model {
    std::function<Rational(long, const Rational &)> evaluator;
    std::string label;

    Rational operator()(long n, const Rational &k) const { return evaluator(n, k); }
};

/// R(n,k) = F0(n+k)/F0(k)
struct RModel {
    std::function<Rational(long, const Rational &)> evaluator;
    std::string label;

    Rational operator()(long n, const Rational &k) const { return evaluator(n, k); }
};

RModel rFromDetMoment(const Scenario &s);

/// Hilbert-Schmidt two-qubit F2 in Pochhammer form.
F2Model f2HS(const Rational &alpha);

/// Bures F2 for n in {0,1}, and n = 2 at alpha = 1/2; NotAvailable otherwise.
F2Model f2Bures(const Rational &alpha, N2Constant c = N2Constant::Corrected);

/// Qubit-qutrit Hilbert-Schmidt F2 for n in {0,1}, alpha in {1/2, 1}.
F2Model f2QQ(const Rational &alpha);

F2Model candidate8F12(const Rational &alpha);

/// sum_j C(n,j) f2(j, k+n-j) r(n-j, k)
Rational pttSummation(const F2Model &f2, const RModel &r, long n, const Rational &k);

/// (-k)_j (-k-n)_j / (-k-n)_{2j}, continued in k where factors vanish.
Rational pochhammerWeight(long n, const Rational &k, long j);

/// sum_j C(n,j) w_j(n,k) f2(j, k+n-j) r(n-j, k) with w_j = pochhammerWeight(n,k,j).
/// Equals pttSummation for n <= 1.
Rational weightedPttSummation(const F2Model &f2, const RModel &r, long n, const Rational &k);

/// Hybrid Hilbert-Schmidt/Bures moment: the weighted summation with the
/// Hilbert-Schmidt F2 and the Bures R. This is the value of the hybrid 10F9.
Rational hybridMoment(const Rational &alpha, long n, const Rational &k);

/// Plain binomial summation with the same ingredients.
Rational hybridMomentLiteral(const Rational &alpha, long n, const Rational &k);

enum class HybridVariant { TwoQubitBures, QubitQutrit };

struct HybridSeries {
    HybridVariant variant = HybridVariant::TwoQubitBures;
    Scenario prefactorScenario;
    HyperSeries series;

    Rational prefactor(long n, const Rational &k) const;
    /// prefactor times the series, continued in k.
    Rational evaluate(long n, const Rational &k) const;
    /// The weighted summation this series reproduces.
    Rational summation(long n, const Rational &k) const;
};

HybridSeries hybrid10F9(HybridVariant variant, const Rational &alpha);

struct VerificationRecord {
    Rational alpha;
    long n = 0;
    Rational k;
    Rational lhs;
    Rational rhs;
    bool equal = false;
    std::string note;

    std::string toLine() const;
};

struct VerificationReport {
    std::string name;
    std::vector<VerificationRecord> records;

    void add(const Rational &alpha, long n, const Rational &k, const Rational &lhs, const Rational &rhs,
             std::string note = {});
    bool allEqual() const;
    const VerificationRecord *firstFailure() const;
    std::size_t failures() const;
    std::string toLines() const;
};

/// pttSummation(candidate8F12, R^Bures, 1, k) against buresRatioN1(alpha, k).
VerificationReport verify8F12Reproduction(const Rational &alpha, long kFrom, long kTo);

} // namespace detmoments
