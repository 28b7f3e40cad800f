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

#include "detmoments/bigfloat.hpp"
#include "detmoments/formulas.hpp"

#include <string>
#include <vector>

namespace detmoments {

enum class Variable { PtDet, PtTimesDet };
enum class MomentSource { HsEq6, Trial, Hybrid };
enum class MomentMode { KZeroProxy, Balanced };

std::string toString(Variable v);
std::string toString(MomentSource s);
std::string toString(MomentMode m);

/// [-1/16, 1/256] for |rho^PT|, [-2^-12 3^-3, 2^-16] for |rho^PT||rho|.
void supportOf(Variable v, Rational &a, Rational &b);

struct MomentSpec {
    MomentSource source = MomentSource::Hybrid;
    Rational alpha = 1;
    MomentMode mode = MomentMode::KZeroProxy;
    Rational epsilon = Rational(1, Integer("100000000000000000000"));

    Variable variable() const { return mode == MomentMode::Balanced ? Variable::PtTimesDet : Variable::PtDet; }
};

struct MomentSequence {
    Rational a;
    Rational b;
    std::vector<Rational> moments;
    Variable variable = Variable::PtDet;

    long degree() const { return static_cast<long>(moments.size()) - 1; }
    void validate() const;
};

struct FloatMomentSequence {
    Rational a;
    Rational b;
    std::vector<BigFloat> moments;
    Variable variable = Variable::PtDet;
    mpfr_prec_t bits = 0;

    long degree() const { return static_cast<long>(moments.size()) - 1; }
};

/// Exact moments mu_0..mu_N. K_ZERO_PROXY moments are normalized (mu_0 = 1).
MomentSequence buildMoments(const MomentSpec &spec, long N);

/// The same moments at the given working precision, by the exact term-ratio recursion.
FloatMomentSequence buildMomentsFloat(const MomentSpec &spec, long N, mpfr_prec_t bits);

/// Legendre projection on [a,b]: fhat(x) = (2/(b-a)) sum_j lambda_j P_j(t(x)),
/// t(x) = (2x-a-b)/(b-a). Exactly one of the coefficient vectors is filled.
struct DensityApprox {
    Rational a;
    Rational b;
    long degree = 0;
    long precisionBits = 0;
    std::vector<Rational> exactCoeffs;
    std::vector<BigFloat> floatCoeffs;

    bool exact() const { return precisionBits == 0; }
    double value(double x) const;
};

DensityApprox reconstruct(const MomentSequence &ms);
DensityApprox reconstruct(const FloatMomentSequence &ms);

/// Integral of fhat over [threshold, b].
Rational tailProbability(const DensityApprox &d, const Rational &threshold);
BigFloat tailProbabilityFloat(const DensityApprox &d, const Rational &threshold);

/// Tail integral truncated at each requested degree (all <= d.degree), in float.
std::vector<BigFloat> tailPartialSums(const DensityApprox &d, const Rational &threshold,
                                      const std::vector<long> &degrees);

/// Integral of x^m fhat(x) over [a,b], exact mode only.
Rational momentOf(const DensityApprox &d, long m);
/// Moments 0..maxM of an exact reconstruction, expanding the density once.
std::vector<Rational> momentsOf(const DensityApprox &d, long maxM);

struct SepProbEstimate {
    std::string value;
    long N = 0;
    MomentMode mode = MomentMode::KZeroProxy;
    long precisionBits = 0;
    bool stable = false;
    double asDouble = 0;
};

struct SepProbOptions {
    /// 0 selects exact arithmetic; negative selects automatically.
    long precisionBits = -1;
    int digits = 10;
    /// Degrees at which to report the truncated estimate besides N itself.
    std::vector<long> checkpoints;
};

/// Largest N handled by exact arithmetic when the precision is chosen automatically.
constexpr long kExactThreshold = 64;

/// max(4096, 4N) bits. Measured need is about 2.5 bits per moment.
long defaultPrecisionBits(long N);

/// Reconstructs, integrates over [0, b] and divides by mu_0. Float mode repeats the
/// computation at twice the precision and throws PrecisionInsufficient unless the
/// two agree to the requested digits.
SepProbEstimate separabilityProbability(const MomentSpec &spec, long N, const SepProbOptions &opts = {});

/// Estimates at each checkpoint degree (ascending) and at N, from one reconstruction.
std::vector<SepProbEstimate> separabilityProbabilityPath(const MomentSpec &spec, long N,
                                                         const SepProbOptions &opts = {});

struct DensitySample {
    double x;
    double fhat;
};

/// fhat at `points` equally spaced abscissae across [a,b], endpoints included.
std::vector<DensitySample> sampleDensity(const DensityApprox &d, long points);

} // namespace detmoments
