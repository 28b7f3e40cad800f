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

#include "detmoments/utility.hpp"

#include "detmoments/errors.hpp"

#include <sstream>

namespace detmoments {

namespace {

const Rational kHalf = ratio(1, 2);

} // namespace

RModel rFromDetMoment(const Scenario &s) {
    s.validate();
    std::string label = s.family == Family::QubitQutrit ? "R^QQ" : (s.measure == Measure::Bures ? "R^Bures" : "R^HS");
    return {[s](long n, const Rational &k) { return prefactor(s, n, k); }, label + "(alpha=" + toString(s.alpha) + ")"};
}

F2Model f2HS(const Rational &alpha) {
    return {[alpha](long n, const Rational &k) {
                if (n < 0) {
                    throw DomainError("n must be nonnegative");
                }
                const Rational &a = alpha;
                Rational num = pochhammer(a, n) * pochhammer(a + kHalf, n) * pochhammer(-2 * k - 2 * n - 5 * a - 1, n);
                Rational den = power(Rational(64), n) * pochhammer(k + 3 * a + ratio(5, 4), n) *
                               pochhammer(k + 3 * a + ratio(3, 2), n) * pochhammer(k + 3 * a + ratio(7, 4), n);
                if (den == 0) {
                    throw DomainError("F2^HS pole at k = " + toString(k));
                }
                return Rational(num / den);
            },
            "F2^HS(alpha=" + toString(alpha) + ")"};
}

F2Model f2Bures(const Rational &alpha, N2Constant c) {
    return {[alpha, c](long n, const Rational &k) -> Rational {
                if (n == 0) {
                    return 1;
                }
                if (n == 1) {
                    return f2BuresN1(alpha, k);
                }
                if (n == 2 && alpha == kHalf) {
                    Scenario s = buresScenario(alpha);
                    return buresRebitN2Ratio(k, c) - 2 * f2BuresN1(alpha, k + 1) * prefactor(s, 1, k) -
                           prefactor(s, 2, k);
                }
                throw NotAvailable("Bures F2 is known for n <= 1, and n = 2 at alpha = 1/2");
            },
            "F2^Bures(alpha=" + toString(alpha) + ")"};
}

F2Model f2QQ(const Rational &alpha) {
    return {[alpha](long n, const Rational &k) -> Rational {
                if (n == 0) {
                    return 1;
                }
                if (n == 1) {
                    return f2QQN1(alpha, k);
                }
                throw NotAvailable("qubit-qutrit F2 is known for n <= 1");
            },
            "F2^QQ(alpha=" + toString(alpha) + ")"};
}

F2Model candidate8F12(const Rational &alpha) {
    return {[alpha](long n, const Rational &k) { return candidateF2_8F12(alpha, n, k); },
            "F2^8F12(alpha=" + toString(alpha) + ")"};
}

Rational pttSummation(const F2Model &f2, const RModel &r, long n, const Rational &k) {
    if (n < 0) {
        throw DomainError("n must be nonnegative");
    }
    Rational sum = 0;
    for (long j = 0; j <= n; ++j) {
        sum += Rational(binomial(n, j)) * f2(j, k + n - j) * r(n - j, k);
    }
    return sum;
}

Rational pochhammerWeight(long n, const Rational &k, long j) {
    // Every factor is (i - k) or (i - k - n): slope -1 in k. Vanishing factors
    // are replaced by their slope and counted.
    Rational product = 1;
    long order = 0;
    auto factor = [&](const Rational &v, bool numerator) {
        if (v == 0) {
            order += numerator ? 1 : -1;
            product *= -1;
        } else if (numerator) {
            product *= v;
        } else {
            product /= v;
        }
    };
    for (long i = 0; i < j; ++i) {
        factor(i - k, true);
        factor(i - k - n, true);
    }
    for (long i = 0; i < 2 * j; ++i) {
        factor(i - k - n, false);
    }
    if (order < 0) {
        throw PoleBeforeTermination("summation weight has a pole at k = " + toString(k));
    }
    return order > 0 ? Rational(0) : product;
}

Rational weightedPttSummation(const F2Model &f2, const RModel &r, long n, const Rational &k) {
    if (n < 0) {
        throw DomainError("n must be nonnegative");
    }
    Rational sum = 0;
    for (long j = 0; j <= n; ++j) {
        Rational w = pochhammerWeight(n, k, j);
        if (w == 0) {
            continue;
        }
        sum += Rational(binomial(n, j)) * w * f2(j, k + n - j) * r(n - j, k);
    }
    return sum;
}

Rational hybridMoment(const Rational &alpha, long n, const Rational &k) {
    return weightedPttSummation(f2HS(alpha), rFromDetMoment(buresScenario(alpha)), n, k);
}

Rational hybridMomentLiteral(const Rational &alpha, long n, const Rational &k) {
    return pttSummation(f2HS(alpha), rFromDetMoment(buresScenario(alpha)), n, k);
}

Rational HybridSeries::prefactor(long n, const Rational &k) const {
    return detmoments::prefactor(prefactorScenario, n, k);
}

Rational HybridSeries::evaluate(long n, const Rational &k) const {
    return prefactor(n, k) * evaluateKLimit(series, {prefactorScenario.alpha, k, Rational(n)});
}

Rational HybridSeries::summation(long n, const Rational &k) const {
    return weightedPttSummation(f2HS(prefactorScenario.alpha), rFromDetMoment(prefactorScenario), n, k);
}

HybridSeries hybrid10F9(HybridVariant variant, const Rational &alpha) {
    const AffineForm a = AffineForm::alpha();
    const AffineForm k = AffineForm::k();
    const AffineForm n = AffineForm::n();
    const AffineForm tail = -k - n;
    const AffineForm half = -kHalf * k - kHalf * n;
    HybridSeries h;
    h.variant = variant;
    if (variant == HybridVariant::TwoQubitBures) {
        const Rational th = ratio(3, 2);
        h.prefactorScenario = buresScenario(alpha);
        h.series.numerator = {a,
                              a + kHalf,
                              -n,
                              -k,
                              -5 * a - 2 * k - 2 * n - 1,
                              tail,
                              tail - 3 * a,
                              tail - 2 * a,
                              tail - th * a - ratio(1, 4),
                              tail - th * a + ratio(1, 4)};
        h.series.denominator = {tail + kHalf,
                                tail - 3 * a - ratio(3, 4),
                                tail - 3 * a - kHalf,
                                tail - 3 * a - ratio(1, 4),
                                tail - a + kHalf,
                                tail - kHalf * a,
                                tail - kHalf * a + kHalf,
                                half,
                                half + kHalf};
        h.series.argument = 1;
    } else {
        h.prefactorScenario = qubitQutritScenario(alpha);
        h.series.numerator = {a,
                              a + kHalf,
                              -k,
                              -5 * a - 2 * k - 2 * n - 1,
                              tail - 5 * a - ratio(5, 6),
                              tail - 5 * a - ratio(2, 3),
                              tail - 5 * a - kHalf,
                              tail - 5 * a - ratio(1, 3),
                              tail - 5 * a - ratio(1, 6),
                              -n};
        h.series.denominator = {tail - 4 * a,
                                tail - 3 * a - ratio(3, 4),
                                tail - 3 * a - kHalf,
                                tail - 3 * a - ratio(1, 4),
                                tail - 3 * a,
                                tail - 2 * a,
                                tail - a,
                                half,
                                half + kHalf};
        h.series.argument = ratio(729, 4);
    }
    return h;
}

std::string VerificationRecord::toLine() const {
    std::ostringstream out;
    out << "alpha=" << toString(alpha) << " n=" << n << " k=" << toString(k) << " lhs=" << toString(lhs)
        << " rhs=" << toString(rhs) << " equal=" << (equal ? "true" : "false");
    if (!note.empty()) {
        out << " note=" << note;
    }
    return out.str();
}

void VerificationReport::add(const Rational &alpha, long n, const Rational &k, const Rational &lhs,
                             const Rational &rhs, std::string note) {
    records.push_back({alpha, n, k, lhs, rhs, lhs == rhs, std::move(note)});
}

bool VerificationReport::allEqual() const { return firstFailure() == nullptr; }

const VerificationRecord *VerificationReport::firstFailure() const {
    for (const auto &r : records) {
        if (!r.equal) {
            return &r;
        }
    }
    return nullptr;
}

std::size_t VerificationReport::failures() const {
    std::size_t count = 0;
    for (const auto &r : records) {
        count += r.equal ? 0 : 1;
    }
    return count;
}

std::string VerificationReport::toLines() const {
    std::string out;
    for (const auto &r : records) {
        out += r.toLine();
        out += '\n';
    }
    return out;
}

VerificationReport verify8F12Reproduction(const Rational &alpha, long kFrom, long kTo) {
    VerificationReport report;
    report.name = "8f12-reproduction";
    F2Model f2 = candidate8F12(alpha);
    RModel r = rFromDetMoment(buresScenario(alpha));
    for (long k = kFrom; k <= kTo; ++k) {
        report.add(alpha, 1, k, pttSummation(f2, r, 1, k), buresRatioN1(alpha, k));
    }
    return report;
}

} // namespace detmoments
