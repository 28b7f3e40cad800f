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

#include "detmoments/formulas.hpp"

#include "detmoments/errors.hpp"

namespace detmoments {

namespace {

const Rational kHalf = ratio(1, 2);

PolynomialQ lin(long a, long b) { return PolynomialQ::linear(a, b); }

RationalFunctionQ quotient(const PolynomialQ &num, const PolynomialQ &den) { return RationalFunctionQ(num, den); }

Rational evaluateAt(const RationalFunctionQ &r, const Rational &k) { return r(k); }

void requireAlpha(const Rational &alpha, const char *what) {
    if (alpha != kHalf && alpha != 1) {
        throw UnsupportedAlpha(std::string(what) + " is available for alpha = 1/2 and 1, got " + toString(alpha));
    }
}

void requireNonNegative(long n) {
    if (n < 0) {
        throw DomainError("n must be nonnegative");
    }
}

} // namespace

void Scenario::validate() const {
    if (sgn(alpha) < 0) {
        throw DomainError("alpha must be nonnegative");
    }
    if (family == Family::QubitQutrit && measure == Measure::Bures) {
        throw UnsupportedScenario("qubit-qutrit moments are available for Hilbert-Schmidt only");
    }
}

Scenario buresScenario(const Rational &alpha) { return {Family::GeneralizedTwoQubit, Measure::Bures, alpha}; }
Scenario hsScenario(const Rational &alpha) { return {Family::GeneralizedTwoQubit, Measure::HilbertSchmidt, alpha}; }
Scenario qubitQutritScenario(const Rational &alpha) { return {Family::QubitQutrit, Measure::HilbertSchmidt, alpha}; }

bool isExtrapolated(const Scenario &s) {
    return s.measure == Measure::Bures && s.alpha != kHalf && s.alpha != 1;
}

DetMomentFormula detMomentFormula(const Scenario &s) {
    s.validate();
    const Rational &a = s.alpha;
    DetMomentFormula f;
    if (s.family == Family::QubitQutrit) {
        f.geometric = 1;
        for (int i = 0; i < 6; ++i) {
            f.numerator.push_back({i * a + 1, 1});
        }
        f.denominator.push_back({30 * a + 6, 6});
    } else if (s.measure == Measure::Bures) {
        f.geometric = ratio(1, 256);
        f.numerator = {{kHalf, 1}, {a + kHalf, 1}, {a + 1, 2}};
        f.denominator = {{2 * a + 1, 1}, {3 * a + 1, 1}, {3 * a + ratio(3, 2), 2}};
    } else {
        f.geometric = ratio(1, 64);
        f.numerator = {{Rational(1), 1}, {a + 1, 1}, {2 * a + 1, 1}};
        f.denominator = {{3 * a + ratio(3, 2), 1}, {6 * a + ratio(5, 2), 2}};
    }
    return f;
}

Rational prefactor(const Scenario &s, long n, const Rational &k) {
    requireNonNegative(n);
    DetMomentFormula f = detMomentFormula(s);
    Rational value = power(f.geometric, n);
    for (const auto &p : f.numerator) {
        value *= pochhammer(p.base + p.multiplier * k, p.multiplier * n);
    }
    for (const auto &p : f.denominator) {
        Rational d = pochhammer(p.base + p.multiplier * k, p.multiplier * n);
        if (d == 0) {
            throw DomainError("prefactor denominator vanishes at k = " + toString(k));
        }
        value /= d;
    }
    return value;
}

Rational detMoment(const Scenario &s, const Rational &k) {
    if (!isInteger(k) || sgn(k) < 0) {
        throw DomainError("detMoment needs a nonnegative integer k (non-integer k is a Gamma-function ratio), got " +
                          toString(k));
    }
    return prefactor(s, toLong(k), 0);
}

Rational buresRatioN1(const Rational &alpha, const Rational &k) {
    requireAlpha(alpha, "buresRatioN1");
    static const RationalFunctionQ qubit = catalog::buresQubitN1();
    static const RationalFunctionQ rebit = catalog::buresRebitN1();
    return evaluateAt(alpha == 1 ? qubit : rebit, k);
}

Rational buresRatioN1(const Scenario &s, const Rational &k) {
    if (s.measure != Measure::Bures || s.family != Family::GeneralizedTwoQubit) {
        throw UnsupportedScenario("buresRatioN1 needs the Bures two-qubit family");
    }
    return buresRatioN1(s.alpha, k);
}

HyperSeries hsSeries() {
    const AffineForm a = AffineForm::alpha();
    const AffineForm k = AffineForm::k();
    const AffineForm n = AffineForm::n();
    HyperSeries s;
    s.numerator = {-n, -k, a, a + kHalf, -2 * k - 2 * n - 5 * a - 1};
    s.denominator = {-k - n - a, -k - n - 2 * a, -kHalf * (k + n), -kHalf * (k + n) + kHalf};
    s.argument = 1;
    return s;
}

HyperSeries trialSeries() {
    const AffineForm a = AffineForm::alpha();
    const AffineForm k = AffineForm::k();
    const AffineForm n = AffineForm::n();
    HyperSeries s;
    s.numerator = {-n, -k, a, a + kHalf, -2 * k - 2 * n - 8 * a - 4, -2 * k - 2 * n - 2 * a - 3};
    s.denominator = {-k - n, -k - n - 4 * a, -kHalf * (k + n) + ratio(1, 4), -kHalf * (k + n) + kHalf,
                     -2 * k - 2 * n - 5};
    s.argument = 1;
    return s;
}

Rational hsRatio(const Rational &alpha, long n, const Rational &k) {
    requireNonNegative(n);
    return prefactor(hsScenario(alpha), n, k) * evaluateKLimit(hsSeries(), {alpha, k, Rational(n)});
}

Rational trialBuresRatio(const Rational &alpha, long n, const Rational &k) {
    requireNonNegative(n);
    return prefactor(buresScenario(alpha), n, k) * evaluateKLimit(trialSeries(), {alpha, k, Rational(n)});
}

Rational classicalRatio(Measure m, const Rational &k) {
    Rational num;
    Rational den;
    if (m == Measure::HilbertSchmidt) {
        num = power(k + 1, 3);
        den = 8 * (2 * k + 3) * (4 * k + 5) * (4 * k + 7);
    } else {
        num = power(2 * k + 1, 3);
        den = 128 * (k + 1) * (4 * k + 3) * (4 * k + 5);
    }
    if (den == 0) {
        throw DomainError("classicalRatio pole at k = " + toString(k));
    }
    return num / den;
}

Rational jointJ(const Rational &alpha, const Rational &k) {
    const Rational &a = alpha;
    Rational common = (k + 1) * (2 * k + 1) * (a + 2 * k + 2) * (3 * a + 2 * k);
    Rational den1 = common * (3 * a + k + 2);
    if (den1 == 0) {
        throw DomainError("J pole at k = " + toString(k));
    }
    Rational t1 = -(a * (2 * a + 1) * (4 * a - 1) * (4 * a + 1)) / den1;
    Rational t2 = -(2 * a * (2 * a + 1) * (4 * a + 4 * k + 5) * (8 * a + 4 * k + 3)) / common;
    return t1 + t2 + 1;
}

Rational f2BuresN1(const Rational &alpha, const Rational &k) {
    const Rational &a = alpha;
    Rational correctionDen = 256 * (2 * a + k + 1) * (3 * a + k + 1) * (6 * a + 4 * k + 3) * (6 * a + 4 * k + 5);
    if (correctionDen == 0) {
        throw DomainError("F2 pole at k = " + toString(k));
    }
    Rational correction = (2 * k + 1) * (a + 2 * k + 1) * (a + 2 * k + 2) * (2 * a + 2 * k + 1) / correctionDen;
    return prefactor(buresScenario(alpha), 1, k) * jointJ(alpha, k) - correction;
}

Rational numAlpha(const Rational &alpha, const Rational &k) {
    const Rational &a = alpha;
    Rational u = 6 * a + 3 * k + 4;
    return (-7466 * a - 32 * (5 * a - 2) * u * u * u + 6 * (569 * a - 260) * u + 3521) / 27;
}

Rational denAlpha(const Rational &alpha, const Rational &k) {
    const Rational &a = alpha;
    return 128 * a * (2 * a + k + 1) * (3 * a + k + 1) * (3 * a + k + 2) * (6 * a + 4 * k + 3) * (6 * a + 4 * k + 5);
}

Rational qqRatioN1(const Rational &alpha, const Rational &k) {
    requireAlpha(alpha, "qqRatioN1");
    static const RationalFunctionQ rebit = catalog::rebitRetritN1();
    static const RationalFunctionQ qubit = catalog::qubitQutritN1();
    return evaluateAt(alpha == 1 ? qubit : rebit, k);
}

Rational qqSimplifiedN1(const Rational &alpha, const Rational &k) {
    requireAlpha(alpha, "qqSimplifiedN1");
    static const RationalFunctionQ rebit = catalog::rebitRetritSimplified();
    static const RationalFunctionQ qubit = catalog::qubitQutritSimplified();
    return evaluateAt(alpha == 1 ? qubit : rebit, k);
}

Rational f2QQN1(const Rational &alpha, const Rational &k) {
    requireAlpha(alpha, "f2QQN1");
    static const RationalFunctionQ rebit = catalog::f2RebitRetrit();
    static const RationalFunctionQ qubit = catalog::f2QubitQutrit();
    return evaluateAt(alpha == 1 ? qubit : rebit, k);
}

Rational candidateF2_8F12(const Rational &alpha, long n, const Rational &k) {
    requireNonNegative(n);
    const Rational &a = alpha;
    Rational value = pochhammer(numAlpha(alpha, k + n - 1), n) / power(Rational(128), n);
    const Rational factors[] = {a, 2 * a + k + 1, 3 * a + k + 1, 3 * a + k + 2, 6 * a + 4 * k + 3, 6 * a + 4 * k + 5};
    for (const auto &f : factors) {
        Rational d = pochhammer(f, n);
        if (d == 0) {
            throw DomainError("candidate F2 pole");
        }
        value /= d;
    }
    return value;
}

RationalFunctionQ buresRebitN2Function(N2Constant c) {
    long constant = c == N2Constant::Corrected ? (1L << 22) : (1L << 12);
    PolynomialQ den = PolynomialQ::constant(constant) * lin(2, 1).power(2) * lin(3, 1).power(2) * lin(3, 2) *
                      lin(5, 2).power(2) * lin(7, 2) * lin(9, 2) * lin(11, 2);
    return quotient(catalog::buresRebitN2Numerator(), den);
}

Rational buresRebitN2Ratio(const Rational &k, N2Constant c) {
    static const RationalFunctionQ corrected = buresRebitN2Function(N2Constant::Corrected);
    static const RationalFunctionQ literal = buresRebitN2Function(N2Constant::PaperLiteral);
    return evaluateAt(c == N2Constant::Corrected ? corrected : literal, k);
}

Rational EightF12Candidate::quarticValue(const Bindings &b) const {
    Rational v = 0;
    for (const auto &t : quartic) {
        v += t.coefficient * power(b.alpha, t.alphaPower) * power(b.k, t.kPower) * power(b.n, t.nPower);
    }
    return v;
}

BoundSeries EightF12Candidate::bind(const Bindings &b) const {
    BoundSeries s;
    for (const auto &p : affineNumerator) {
        s.numerator.push_back(p.bind(b));
    }
    s.numerator.push_back(quarticValue(b));
    for (const auto &p : denominator) {
        s.denominator.push_back(p.bind(b));
    }
    s.argument = argument;
    return s;
}

EightF12Candidate eightF12Candidate() {
    const AffineForm a = AffineForm::alpha();
    const AffineForm k = AffineForm::k();
    const AffineForm n = AffineForm::n();
    const AffineForm base = -2 * a - ratio(4, 3) * k - ratio(4, 3) * n;
    const AffineForm tail = -k - n;
    EightF12Candidate c;
    c.affineNumerator = {base - ratio(4, 3), base - 1, base - ratio(2, 3), base - ratio(2, 3), base - ratio(1, 3),
                         base, -n};
    c.quartic = {
        {-1280, 4, 0, 0}, {-128, 3, 0, 0}, {908, 2, 0, 0},   {-460, 1, 0, 0},  {-160, 1, 3, 0},
        {64, 0, 3, 0},    {-960, 2, 2, 0}, {224, 1, 2, 0},   {-480, 1, 2, 1},  {192, 0, 2, 1},
        {64, 0, 2, 0},    {-1920, 3, 1, 0}, {128, 2, 1, 0},  {582, 1, 1, 0},   {-480, 1, 1, 2},
        {192, 0, 1, 2},   {-1920, 2, 1, 1}, {448, 1, 1, 1},  {128, 0, 1, 1},   {-152, 0, 1, 0},
        {-160, 1, 0, 3},  {64, 0, 0, 3},   {-960, 2, 0, 2},  {224, 1, 0, 2},   {64, 0, 0, 2},
        {-1920, 3, 0, 1}, {128, 2, 0, 1},  {582, 1, 0, 1},   {-152, 0, 0, 1},  {75, 0, 0, 0},
    };
    const Rational h = ratio(3, 2);
    c.denominator = {a,
                     tail + kHalf,
                     tail - 3 * a - 1,
                     tail - h * a - 1,
                     tail - h * a - ratio(3, 4),
                     tail - h * a - kHalf,
                     tail - h * a - kHalf,
                     tail - h * a - ratio(1, 4),
                     tail - h * a,
                     tail - a + kHalf,
                     tail - kHalf * a,
                     tail - kHalf * a + kHalf};
    c.argument = ratio(729, 32768);
    return c;
}

namespace catalog {

namespace {

PolynomialQ desc(std::initializer_list<long> c) { return PolynomialQ::fromDescending(c); }

PolynomialQ k() { return lin(0, 1); }

RationalFunctionQ over(long num, const PolynomialQ &den) { return quotient(PolynomialQ::constant(num), den); }

} // namespace

RationalFunctionQ legacyQubitN1() {
    return quotient(desc({8, 36, -82, -681, -1366, -885}), 128 * desc({16, 192, 883, 1947, 2062, 840}));
}

RationalFunctionQ legacyRebitN1() {
    return quotient(desc({64, 128, -340, -1032, -1099, -384}), k() * desc({8, -2, -1}) * desc({8, 18, -5}));
}

RationalFunctionQ buresQubitN1() {
    return quotient(desc({8, 76, 142, -631, -2790, -2970}), desc({2048, 34816, 231808, 756224, 1209984, 760320}));
}

RationalFunctionQ buresRebitN1() {
    return quotient(desc({64, 448, 812, -644, -3351, -2663}), desc({16384, 188416, 847872, 1869824, 2023424, 860160}));
}

RationalFunctionQ hsClassical() { return quotient(desc({1, 3, 3, 1}), desc({256, 1152, 1712, 840})); }

RationalFunctionQ buresClassical() { return quotient(desc({8, 12, 6, 1}), desc({2048, 6144, 6016, 1920})); }

RationalFunctionQ trialQubitN1() {
    return quotient(desc({8, 76, 142, -631, -2028, -1467}), desc({2048, 34816, 231808, 756224, 1209984, 760320}));
}

RationalFunctionQ trialRebitN1() {
    return quotient(desc({64, 448, 812, -644, -2231, -1095}), desc({16384, 188416, 847872, 1869824, 2023424, 860160}));
}

RationalFunctionQ f2Complex() {
    return quotient(desc({-96, -960, -2994, -3015}), desc({2048, 34816, 231808, 756224, 1209984, 760320}));
}

RationalFunctionQ f2Real() {
    return quotient(desc({-16, -112, -245, -173}), desc({1024, 11776, 52992, 116864, 126464, 53760}));
}

RationalFunctionQ rebitRetritN1() {
    return quotient(desc({4, 40, 95, -220, -1149, -1170}),
                    576 * lin(4, 1) * lin(11, 3) * lin(13, 3) * lin(23, 6) * lin(25, 6));
}

RationalFunctionQ qubitQutritN1() {
    return quotient(desc({1, 15, 37, -423, -2558, -3840}),
                    72 * lin(13, 2) * lin(19, 3) * lin(20, 3) * lin(37, 6) * lin(41, 6));
}

RationalFunctionQ rebitRetritSimplified() { return quotient(desc({4, 20, -29, -195}), desc({4, 20, 31, 15})); }

RationalFunctionQ qubitQutritSimplified() { return quotient(desc({1, 7, -34, -256}), desc({1, 7, 14, 8})); }

RationalFunctionQ f2RebitRetrit() {
    return quotient(desc({-10, -85, -235, -210}), desc({31104, 622080, 4972320, 19854720, 39605856, 31574400}));
}

RationalFunctionQ f2QubitQutrit() {
    return quotient(desc({4, 54, 211, 330}), desc({3888, 126360, 1642140, 10666890, 34633182, 44963880}));
}

RationalFunctionQ hybridQubitN1() {
    RationalFunctionQ sum = RationalFunctionQ::constant(2);
    sum = sum + over(-60, lin(4, 1)) + over(-384, lin(9, 2)) + over(15, lin(9, 4)) + over(-315, lin(11, 4)) +
          over(192, lin(17, 4)) + over(576, lin(19, 4)) + over(120, lin(3, 1));
    return sum * RationalFunctionQ::constant(ratio(1, 512));
}

RationalFunctionQ hybridRebitN1() {
    PolynomialQ x = k();
    PolynomialQ inner = 4 * x + PolynomialQ::constant(39);
    inner = 4 * x * inner + PolynomialQ::constant(513);
    inner = 4 * x * inner + PolynomialQ::constant(2065);
    inner = 2 * x * inner - PolynomialQ::constant(4637);
    inner = x * inner - PolynomialQ::constant(12494);
    inner = x * inner - PolynomialQ::constant(7095);
    return quotient(inner, 2048 * lin(2, 1).power(2) * lin(3, 1) * lin(3, 2) * lin(5, 2) * lin(13, 4));
}

PolynomialQ buresRebitN2Numerator() {
    return desc({4096, 86016, 730624, 3191808, 7842576, 16125680, 63736088, 248378840, 557112761, 644925323,
                 303925362});
}

std::vector<Entry> all() {
    return {
        {"legacy-qubit-n1", legacyQubitN1()},
        {"legacy-rebit-n1", legacyRebitN1()},
        {"bures-qubit-n1", buresQubitN1()},
        {"bures-rebit-n1", buresRebitN1()},
        {"hs-classical", hsClassical()},
        {"bures-classical", buresClassical()},
        {"trial-qubit-n1", trialQubitN1()},
        {"trial-rebit-n1", trialRebitN1()},
        {"f2-complex", f2Complex()},
        {"f2-real", f2Real()},
        {"rebit-retrit-n1", rebitRetritN1()},
        {"qubit-qutrit-n1", qubitQutritN1()},
        {"rebit-retrit-simplified", rebitRetritSimplified()},
        {"qubit-qutrit-simplified", qubitQutritSimplified()},
        {"f2-rebit-retrit", f2RebitRetrit()},
        {"f2-qubit-qutrit", f2QubitQutrit()},
        {"hybrid-qubit-n1", hybridQubitN1()},
        {"hybrid-rebit-n1", hybridRebitN1()},
        {"bures-rebit-n2", buresRebitN2Function()},
    };
}

} // namespace catalog

} // namespace detmoments
