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

#include "detmoments/inversion.hpp"

#include "detmoments/errors.hpp"
#include "detmoments/parallel.hpp"
#include "detmoments/polynomial.hpp"
#include "detmoments/utility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace detmoments {

std::string toString(Variable v) { return v == Variable::PtDet ? "PT_DET" : "PT_TIMES_DET"; }

std::string toString(MomentSource s) {
    switch (s) {
    case MomentSource::HsEq6:
        return "HS_EQ6";
    case MomentSource::Trial:
        return "TRIAL_EQ10";
    case MomentSource::Hybrid:
        return "HYBRID_SUMMATION";
    }
    return "?";
}

std::string toString(MomentMode m) { return m == MomentMode::KZeroProxy ? "K_ZERO_PROXY" : "BALANCED_KN"; }

void supportOf(Variable v, Rational &a, Rational &b) {
    if (v == Variable::PtDet) {
        a = ratio(-1, 16);
        b = ratio(1, 256);
    } else {
        a = ratio(-1, 4096 * 27);
        b = ratio(1, 65536);
    }
}

void MomentSequence::validate() const {
    if (moments.empty()) {
        throw DomainError("moment sequence is empty");
    }
    if (sgn(moments[0]) <= 0) {
        throw DomainError("mu_0 must be positive");
    }
    if (!(a < b)) {
        throw DomainError("support needs a < b");
    }
}

namespace {

Scenario f0Scenario(const MomentSpec &spec) {
    return spec.source == MomentSource::HsEq6 ? hsScenario(spec.alpha) : buresScenario(spec.alpha);
}

HyperSeries seriesOf(const MomentSpec &spec) {
    switch (spec.source) {
    case MomentSource::HsEq6:
        return hsSeries();
    case MomentSource::Trial:
        return trialSeries();
    case MomentSource::Hybrid:
        break;
    }
    return hybrid10F9(HybridVariant::TwoQubitBures, spec.alpha).series;
}

Rational exactRatio(const MomentSpec &spec, long n, const Rational &k) {
    switch (spec.source) {
    case MomentSource::HsEq6:
        return hsRatio(spec.alpha, n, k);
    case MomentSource::Trial:
        return trialBuresRatio(spec.alpha, n, k);
    case MomentSource::Hybrid:
        break;
    }
    return hybridMoment(spec.alpha, n, k);
}

// R(n+1,k)/R(n,k).
Rational prefactorStep(const DetMomentFormula &f, long n, const Rational &k) {
    Rational step = f.geometric;
    for (const auto &p : f.numerator) {
        Rational start = p.base + p.multiplier * (k + n);
        for (long i = 0; i < p.multiplier; ++i) {
            step *= start + i;
        }
    }
    for (const auto &p : f.denominator) {
        Rational start = p.base + p.multiplier * (k + n);
        for (long i = 0; i < p.multiplier; ++i) {
            if (start + i == 0) {
                throw DomainError("prefactor denominator vanishes");
            }
            step /= start + i;
        }
    }
    return step;
}

Integer lcmOfDenominators(const std::vector<Rational> &values) {
    Integer l = 1;
    for (const auto &v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    return l;
}

// Terminating series at bound parameters, summed at the precision of `out`.
// Parameters are scaled to integers so each term ratio is one mpz quotient.
void seriesFloat(const BoundSeries &s, mpfr_ptr out) {
    long T = terminationIndex(s);
    std::vector<Rational> all = s.numerator;
    all.insert(all.end(), s.denominator.begin(), s.denominator.end());
    Integer D = lcmOfDenominators(all);
    std::vector<Integer> A;
    std::vector<Integer> B;
    for (const auto &a : s.numerator) {
        A.push_back(Integer(a * D));
    }
    for (const auto &b : s.denominator) {
        B.push_back(Integer(b * D));
    }
    long gap = static_cast<long>(s.numerator.size()) - static_cast<long>(s.denominator.size());
    Integer zNum = s.argument.get_num();
    Integer zDen = s.argument.get_den();
    Integer dPower;
    mpz_pow_ui(dPower.get_mpz_t(), D.get_mpz_t(), static_cast<unsigned long>(std::labs(gap)));
    if (gap >= 0) {
        zDen *= dPower;
    } else {
        zNum *= dPower;
    }

    mpfr_prec_t bits = mpfr_get_prec(out);
    BigFloat term(bits);
    mpfr_set_ui(term.get(), 1, MPFR_RNDN);
    mpfr_set_ui(out, 1, MPFR_RNDN);
    Integer top;
    Integer bottom;
    Integer factor;
    Integer mantissa;
    for (long j = 0; j < T; ++j) {
        top = zNum;
        bottom = zDen * (j + 1);
        Integer offset = D * j;
        for (const auto &a : A) {
            factor = a + offset;
            top *= factor;
        }
        for (const auto &b : B) {
            factor = b + offset;
            if (factor == 0) {
                throw PoleBeforeTermination("denominator parameter vanishes before termination");
            }
            bottom *= factor;
        }
        // term *= top/bottom on the integer significand: mpfr_div_z would cost a
        // full-precision division, the mpz quotient by a short divisor is linear.
        mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), term.get());
        mantissa *= top;
        mp_bitcnt_t shift = mpz_sizeinbase(bottom.get_mpz_t(), 2) + 2;
        mpz_mul_2exp(mantissa.get_mpz_t(), mantissa.get_mpz_t(), shift);
        mpz_tdiv_q(mantissa.get_mpz_t(), mantissa.get_mpz_t(), bottom.get_mpz_t());
        mpfr_set_z_2exp(term.get(), mantissa.get_mpz_t(), e - static_cast<mpfr_exp_t>(shift), MPFR_RNDN);
        mpfr_add(out, out, term.get(), MPFR_RNDN);
    }
}

void pqOf(const Rational &a, const Rational &b, Rational &p, Rational &q) {
    p = 2 / (b - a);
    q = -(a + b) / (b - a);
}

std::vector<Rational> legendreAtExact(const Rational &t, long N) {
    std::vector<Rational> P(static_cast<std::size_t>(N) + 2);
    P[0] = 1;
    P[1] = t;
    for (long j = 1; j <= N; ++j) {
        P[j + 1] = (Rational(2 * j + 1) * t * P[j] - Rational(j) * P[j - 1]) / (j + 1);
    }
    return P;
}

std::vector<BigFloat> legendreAtFloat(const Rational &t, long N, mpfr_prec_t bits) {
    std::vector<BigFloat> P;
    P.reserve(static_cast<std::size_t>(N) + 2);
    P.emplace_back(Rational(1), bits);
    P.emplace_back(t, bits);
    BigFloat tf(t, bits);
    BigFloat tmp(bits);
    for (long j = 1; j <= N; ++j) {
        BigFloat next(bits);
        mpfr_mul(next.get(), tf.get(), P[j].get(), MPFR_RNDN);
        mpfr_mul_si(next.get(), next.get(), 2 * j + 1, MPFR_RNDN);
        mpfr_mul_si(tmp.get(), P[j - 1].get(), j, MPFR_RNDN);
        mpfr_sub(next.get(), next.get(), tmp.get(), MPFR_RNDN);
        mpfr_div_si(next.get(), next.get(), j + 1, MPFR_RNDN);
        P.push_back(std::move(next));
    }
    return P;
}

void requireThreshold(const DensityApprox &d, const Rational &threshold) {
    if (threshold < d.a || threshold > d.b) {
        throw DomainError("threshold outside the support");
    }
}

} // namespace

MomentSequence buildMoments(const MomentSpec &spec, long N) {
    if (N < 0) {
        throw DomainError("N must be nonnegative");
    }
    if (sgn(spec.epsilon) <= 0) {
        throw DomainError("epsilon must be positive");
    }
    MomentSequence ms;
    ms.variable = spec.variable();
    supportOf(ms.variable, ms.a, ms.b);
    ms.moments.resize(static_cast<std::size_t>(N) + 1);
    Scenario s = f0Scenario(spec);
    parallelFor(0, static_cast<std::size_t>(N) + 1, [&](std::size_t i) {
        long n = static_cast<long>(i);
        if (spec.mode == MomentMode::KZeroProxy) {
            ms.moments[i] = exactRatio(spec, n, spec.epsilon);
        } else {
            ms.moments[i] = exactRatio(spec, n, n) * detMoment(s, n);
        }
    });
    return ms;
}

FloatMomentSequence buildMomentsFloat(const MomentSpec &spec, long N, mpfr_prec_t bits) {
    if (N < 0) {
        throw DomainError("N must be nonnegative");
    }
    if (sgn(spec.epsilon) <= 0) {
        throw DomainError("epsilon must be positive");
    }
    FloatMomentSequence ms;
    ms.variable = spec.variable();
    ms.bits = bits;
    supportOf(ms.variable, ms.a, ms.b);
    DetMomentFormula f = detMomentFormula(f0Scenario(spec));
    HyperSeries series = seriesOf(spec);
    bool balanced = spec.mode == MomentMode::Balanced;

    // Outer factor: R(n, eps) for the k = 0 proxy, F0(2n) in balanced mode.
    std::vector<BigFloat> outer;
    outer.reserve(static_cast<std::size_t>(N) + 1);
    BigFloat running(Rational(1), bits);
    for (long n = 0; n <= N; ++n) {
        outer.push_back(running);
        if (balanced) {
            mpfr_mul_q(running.get(), running.get(), prefactorStep(f, 2 * n, 0).get_mpq_t(), MPFR_RNDN);
            mpfr_mul_q(running.get(), running.get(), prefactorStep(f, 2 * n + 1, 0).get_mpq_t(), MPFR_RNDN);
        } else {
            mpfr_mul_q(running.get(), running.get(), prefactorStep(f, n, spec.epsilon).get_mpq_t(), MPFR_RNDN);
        }
    }

    ms.moments.resize(static_cast<std::size_t>(N) + 1, BigFloat(bits));
    parallelFor(0, static_cast<std::size_t>(N) + 1, [&](std::size_t i) {
        long n = static_cast<long>(i);
        Rational k = balanced ? Rational(n) : spec.epsilon;
        BigFloat sum(bits);
        seriesFloat(bind(series, {spec.alpha, k, Rational(n)}), sum.get());
        mpfr_mul(ms.moments[i].get(), sum.get(), outer[i].get(), MPFR_RNDN);
    });
    return ms;
}

double DensityApprox::value(double x) const {
    // Three-term recurrence at the coefficient precision; exact coefficients use 512 bits.
    mpfr_prec_t bits = exact() ? 512 : precisionBits;
    Rational p;
    Rational q;
    pqOf(a, b, p, q);
    BigFloat t(p, bits);
    mpfr_mul_d(t.get(), t.get(), x, MPFR_RNDN);
    BigFloat qf(q, bits);
    mpfr_add(t.get(), t.get(), qf.get(), MPFR_RNDN);

    BigFloat prev(Rational(1), bits);
    BigFloat cur(bits);
    mpfr_set(cur.get(), t.get(), MPFR_RNDN);
    BigFloat next(bits);
    BigFloat tmp(bits);
    BigFloat sum(bits);
    auto coeff = [&](long j) { return exact() ? BigFloat(exactCoeffs[j], bits) : floatCoeffs[j]; };
    BigFloat c = coeff(0);
    mpfr_set(sum.get(), c.get(), MPFR_RNDN);
    for (long j = 1; j <= degree; ++j) {
        c = coeff(j);
        mpfr_mul(tmp.get(), c.get(), cur.get(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), tmp.get(), MPFR_RNDN);
        mpfr_mul(next.get(), t.get(), cur.get(), MPFR_RNDN);
        mpfr_mul_si(next.get(), next.get(), 2 * j + 1, MPFR_RNDN);
        mpfr_mul_si(tmp.get(), prev.get(), j, MPFR_RNDN);
        mpfr_sub(next.get(), next.get(), tmp.get(), MPFR_RNDN);
        mpfr_div_si(next.get(), next.get(), j + 1, MPFR_RNDN);
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    mpfr_mul_q(sum.get(), sum.get(), p.get_mpq_t(), MPFR_RNDN);
    return sum.toDouble();
}

DensityApprox reconstruct(const MomentSequence &ms) {
    ms.validate();
    long N = ms.degree();
    Rational p;
    Rational q;
    pqOf(ms.a, ms.b, p, q);
    DensityApprox d;
    d.a = ms.a;
    d.b = ms.b;
    d.degree = N;
    d.precisionBits = 0;
    d.exactCoeffs.resize(static_cast<std::size_t>(N) + 1);

    // Row j holds E[P_j(t) x^m] for m = 0..N-j.
    std::vector<Rational> prev;
    std::vector<Rational> cur = ms.moments;
    for (long j = 0; j <= N; ++j) {
        d.exactCoeffs[j] = Rational(2 * j + 1, 2) * cur[0];
        d.exactCoeffs[j].canonicalize();
        if (j == N) {
            break;
        }
        std::vector<Rational> next(static_cast<std::size_t>(N - j));
        for (long m = 0; m < N - j; ++m) {
            Rational v = Rational(2 * j + 1) * (p * cur[m + 1] + q * cur[m]);
            if (j > 0) {
                v -= Rational(j) * prev[m];
            }
            next[m] = v / (j + 1);
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return d;
}

DensityApprox reconstruct(const FloatMomentSequence &ms) {
    if (ms.moments.empty()) {
        throw DomainError("moment sequence is empty");
    }
    long N = ms.degree();
    mpfr_prec_t bits = ms.bits;
    Rational p;
    Rational q;
    pqOf(ms.a, ms.b, p, q);
    // p = pN/D, q = qN/D over a common denominator: every step multiplies by machine integers.
    Integer D = lcmOfDenominators({p, q});
    Integer pN = Integer(p * D);
    Integer qN = Integer(q * D);
    if (!D.fits_slong_p() || !pN.fits_slong_p() || !qN.fits_slong_p()) {
        throw DomainError("support endpoints too large for the float recurrence");
    }
    long dl = D.get_si();
    long pl = pN.get_si();
    long ql = qN.get_si();
    const long limit = std::numeric_limits<long>::max() / (std::max({std::labs(pl), std::labs(ql), dl}) + 1);
    if (2 * N + 1 >= limit) {
        throw DomainError("degree too large for the float recurrence");
    }

    DensityApprox d;
    d.a = ms.a;
    d.b = ms.b;
    d.degree = N;
    d.precisionBits = bits;
    d.floatCoeffs.reserve(static_cast<std::size_t>(N) + 1);

    std::vector<BigFloat> cur = ms.moments;
    std::vector<BigFloat> prev(cur.size(), BigFloat(bits));
    for (long j = 0; j <= N; ++j) {
        BigFloat lambda(bits);
        mpfr_mul_si(lambda.get(), cur[0].get(), 2 * j + 1, MPFR_RNDN);
        mpfr_div_2ui(lambda.get(), lambda.get(), 1, MPFR_RNDN);
        d.floatCoeffs.push_back(std::move(lambda));
        if (j == N) {
            break;
        }
        const long c1 = (2 * j + 1) * pl;
        const long c2 = (2 * j + 1) * ql;
        const long c3 = j * dl;
        const long c4 = (j + 1) * dl;
        parallelChunks(0, static_cast<std::size_t>(N - j), [&](std::size_t lo, std::size_t hi) {
            BigFloat tmp(bits);
            for (std::size_t m = lo; m < hi; ++m) {
                mpfr_ptr out = prev[m].get();
                mpfr_mul_si(out, out, -c3, MPFR_RNDN);
                mpfr_mul_si(tmp.get(), cur[m + 1].get(), c1, MPFR_RNDN);
                mpfr_add(out, out, tmp.get(), MPFR_RNDN);
                mpfr_mul_si(tmp.get(), cur[m].get(), c2, MPFR_RNDN);
                mpfr_add(out, out, tmp.get(), MPFR_RNDN);
                mpfr_div_si(out, out, c4, MPFR_RNDN);
            }
        });
        std::swap(prev, cur);
    }
    return d;
}

Rational tailProbability(const DensityApprox &d, const Rational &threshold) {
    if (!d.exact()) {
        throw DomainError("exact tail requested for a float reconstruction");
    }
    requireThreshold(d, threshold);
    Rational p;
    Rational q;
    pqOf(d.a, d.b, p, q);
    Rational t0 = p * threshold + q;
    std::vector<Rational> P = legendreAtExact(t0, d.degree);
    Rational tail = d.exactCoeffs[0] * (1 - t0);
    for (long j = 1; j <= d.degree; ++j) {
        tail += d.exactCoeffs[j] * (P[j - 1] - P[j + 1]) / (2 * j + 1);
    }
    return tail;
}

std::vector<BigFloat> tailPartialSums(const DensityApprox &d, const Rational &threshold,
                                      const std::vector<long> &degrees) {
    requireThreshold(d, threshold);
    mpfr_prec_t bits = d.exact() ? 512 : d.precisionBits;
    Rational p;
    Rational q;
    pqOf(d.a, d.b, p, q);
    Rational t0 = p * threshold + q;
    std::vector<BigFloat> P = legendreAtFloat(t0, d.degree, bits);
    std::vector<long> wanted = degrees;
    std::sort(wanted.begin(), wanted.end());
    if (!wanted.empty() && (wanted.front() < 0 || wanted.back() > d.degree)) {
        throw DomainError("checkpoint degree outside 0..N");
    }
    std::vector<BigFloat> out;
    BigFloat tail(bits);
    BigFloat tmp(bits);
    BigFloat c(bits);
    std::size_t next = 0;
    for (long j = 0; j <= d.degree && next < wanted.size(); ++j) {
        c = d.exact() ? BigFloat(d.exactCoeffs[j], bits) : d.floatCoeffs[j];
        if (j == 0) {
            BigFloat w(1 - t0, bits);
            mpfr_mul(tmp.get(), c.get(), w.get(), MPFR_RNDN);
        } else {
            mpfr_sub(tmp.get(), P[j - 1].get(), P[j + 1].get(), MPFR_RNDN);
            mpfr_mul(tmp.get(), tmp.get(), c.get(), MPFR_RNDN);
            mpfr_div_si(tmp.get(), tmp.get(), 2 * j + 1, MPFR_RNDN);
        }
        mpfr_add(tail.get(), tail.get(), tmp.get(), MPFR_RNDN);
        while (next < wanted.size() && wanted[next] == j) {
            out.push_back(tail);
            ++next;
        }
    }
    return out;
}

BigFloat tailProbabilityFloat(const DensityApprox &d, const Rational &threshold) {
    return tailPartialSums(d, threshold, {d.degree}).front();
}

std::vector<Rational> momentsOf(const DensityApprox &d, long maxM) {
    if (!d.exact()) {
        throw DomainError("exact moments requested for a float reconstruction");
    }
    Rational p;
    Rational q;
    pqOf(d.a, d.b, p, q);
    PolynomialQ t = PolynomialQ::linear(q, p);
    PolynomialQ prev = PolynomialQ::constant(1);
    PolynomialQ cur = t;
    PolynomialQ f = PolynomialQ::constant(d.exactCoeffs[0]);
    for (long j = 1; j <= d.degree; ++j) {
        f = f + d.exactCoeffs[j] * cur;
        PolynomialQ next = (Rational(2 * j + 1, j + 1) * t) * cur - Rational(j, j + 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(maxM) + 1);
    for (long m = 0; m <= maxM; ++m) {
        Rational total = 0;
        for (int i = 0; i <= f.degree(); ++i) {
            long e = m + i + 1;
            total += f.coefficient(i) * (power(d.b, e) - power(d.a, e)) / e;
        }
        out.push_back(p * total);
    }
    return out;
}

Rational momentOf(const DensityApprox &d, long m) { return momentsOf(d, m).back(); }

long defaultPrecisionBits(long N) { return std::max(4096L, 4 * N); }

namespace {

std::string render(const BigFloat &x, int digits) { return x.toString(digits); }

bool agrees(const BigFloat &lo, const BigFloat &hi, int digits) {
    mpfr_prec_t bits = hi.precision();
    BigFloat diff(bits);
    mpfr_sub(diff.get(), hi.get(), lo.get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    BigFloat scale(bits);
    mpfr_abs(scale.get(), hi.get(), MPFR_RNDN);
    if (mpfr_zero_p(scale.get())) {
        return mpfr_zero_p(diff.get()) != 0;
    }
    mpfr_div(diff.get(), diff.get(), scale.get(), MPFR_RNDN);
    return mpfr_cmp_d(diff.get(), std::pow(10.0, -digits)) <= 0;
}

std::vector<BigFloat> floatPath(const MomentSpec &spec, long N, mpfr_prec_t bits, const std::vector<long> &degrees) {
    FloatMomentSequence ms = buildMomentsFloat(spec, N, bits);
    BigFloat mu0 = ms.moments[0];
    DensityApprox d = reconstruct(ms);
    std::vector<BigFloat> tails = tailPartialSums(d, 0, degrees);
    for (auto &t : tails) {
        mpfr_div(t.get(), t.get(), mu0.get(), MPFR_RNDN);
    }
    return tails;
}

} // namespace

std::vector<SepProbEstimate> separabilityProbabilityPath(const MomentSpec &spec, long N, const SepProbOptions &opts) {
    if (N < 0) {
        throw DomainError("N must be nonnegative");
    }
    std::vector<long> degrees = opts.checkpoints;
    degrees.push_back(N);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    long bits = opts.precisionBits;
    if (bits < 0) {
        bits = N <= kExactThreshold ? 0 : defaultPrecisionBits(N);
    }
    std::vector<SepProbEstimate> out;
    if (bits == 0) {
        MomentSequence ms = buildMoments(spec, N);
        DensityApprox d = reconstruct(ms);
        std::vector<BigFloat> tails = tailPartialSums(d, 0, degrees);
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            BigFloat mu0(ms.moments[0], tails[i].precision());
            mpfr_div(tails[i].get(), tails[i].get(), mu0.get(), MPFR_RNDN);
            out.push_back({render(tails[i], opts.digits), degrees[i], spec.mode, 0, true, tails[i].toDouble()});
        }
        return out;
    }

    std::vector<BigFloat> low = floatPath(spec, N, bits, degrees);
    std::vector<BigFloat> high = floatPath(spec, N, 2 * bits, degrees);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (!agrees(low[i], high[i], opts.digits)) {
            throw PrecisionInsufficient("estimate at N=" + std::to_string(degrees[i]) + " changed from " +
                                        render(low[i], opts.digits + 5) + " at " + std::to_string(bits) +
                                        " bits to " + render(high[i], opts.digits + 5) + " at " +
                                        std::to_string(2 * bits) + " bits");
        }
        out.push_back({render(high[i], opts.digits), degrees[i], spec.mode, bits, true, high[i].toDouble()});
    }
    return out;
}

SepProbEstimate separabilityProbability(const MomentSpec &spec, long N, const SepProbOptions &opts) {
    SepProbOptions plain = opts;
    plain.checkpoints.clear();
    return separabilityProbabilityPath(spec, N, plain).back();
}

std::vector<DensitySample> sampleDensity(const DensityApprox &d, long points) {
    if (points < 2) {
        throw DomainError("need at least two sample points");
    }
    std::vector<DensitySample> out(static_cast<std::size_t>(points));
    double a = d.a.get_d();
    double b = d.b.get_d();
    parallelFor(0, out.size(), [&](std::size_t i) {
        double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1);
        out[i] = {x, d.value(x)};
    });
    return out;
}

} // namespace detmoments
