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

#include "detmoments/oracle.hpp"

#include "detmoments/errors.hpp"
#include "detmoments/polynomial.hpp"

#include "json.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>

namespace detmoments {

std::string toString(Convention c) { return c == Convention::Unordered ? "unordered" : "ordered"; }

std::string OracleResult::toJson() const {
    nlohmann::json j;
    j["integrand"] = integrand;
    j["k"] = k;
    j["value"] = value;
    j["est_error"] = estError;
    j["cells"] = cells;
    j["convention"] = toString(convention);
    return j.dump();
}

double densityValue(const Spectrum &l, double alpha) {
    // Log space: near the boundary the inverse roots overflow while the repulsion underflows.
    double logValue = std::log(128 / std::numbers::pi);
    for (double x : l) {
        if (!(x > 0)) {
            throw DomainError("eigenvalues must be positive");
        }
        logValue -= 0.5 * std::log(x);
    }
    if (alpha != 0) {
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                logValue += alpha * (2 * std::log(std::fabs(l[i] - l[j])) - std::log(l[i] + l[j]));
            }
        }
    }
    return std::exp(logValue);
}

namespace {

struct Integral {
    double value;
    double error;
    long evaluations;
};

// f is symmetric or symmetrized by the caller; integrates over the ordered sector
// l1 <= l2 <= l3 <= l4. With l_i = x_i^2 (i = 1,2,3) the inverse square roots of
// the density cancel against the Jacobian 8 x1 x2 x3, leaving a smooth integrand
// for adaptive Gauss-Kronrod at every level.
template <class F>
Integral sectorIntegral(F f, double tolerance) {
    using boost::math::quadrature::gauss_kronrod;
    constexpr unsigned depth = 12;
    long evaluations = 0;
    double innerTol = tolerance * 1e-3;
    double middleTol = tolerance * 1e-2;
    double outerTol = tolerance * 1e-1;
    double err = 0;
    auto level3 = [&](double x1, double x2) {
        double l1 = x1 * x1;
        double l2 = x2 * x2;
        double hi = std::sqrt((1 - l1 - l2) / 2);
        if (!(hi > x2)) {
            return 0.0;
        }
        return gauss_kronrod<double, 31>::integrate(
            [&](double x3) {
                double l3 = x3 * x3;
                double l4 = 1 - l1 - l2 - l3;
                if (!(l1 > 0) || !(l2 > l1) || !(l3 > l2) || !(l4 > l3)) {
                    return 0.0;
                }
                ++evaluations;
                return 8 * x1 * x2 * x3 * f(Spectrum{l1, l2, l3, l4});
            },
            x2, hi, depth, innerTol);
    };
    auto level2 = [&](double x1) {
        double hi = std::sqrt((1 - x1 * x1) / 3);
        if (!(hi > x1)) {
            return 0.0;
        }
        return gauss_kronrod<double, 31>::integrate([&](double x2) { return level3(x1, x2); }, x1, hi, depth,
                                                    middleTol);
    };
    double value = gauss_kronrod<double, 31>::integrate(level2, 0.0, 0.5, depth, outerTol, &err);
    return {value, err, evaluations};
}

const std::array<std::array<int, 4>, 24> &permutations() {
    static const auto table = [] {
        std::array<std::array<int, 4>, 24> out{};
        std::array<int, 4> p{0, 1, 2, 3};
        std::size_t i = 0;
        do {
            out[i++] = p;
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return table;
}

void requireSpec(const QuadSpec &spec) {
    if (!(spec.tolerance > 0) || spec.tolerance >= 1) {
        throw DomainError("quadrature tolerance must lie in (0, 1)");
    }
}

void checkTolerance(const OracleResult &r, double tolerance) {
    if (!(r.estError <= tolerance * std::fabs(r.value)) && r.value != 0) {
        throw ToleranceNotMet(r.integrand + ": error estimate " + std::to_string(r.estError) +
                              " exceeds the requested relative tolerance");
    }
}

MonomialTerm term(long num, long den, int e1, int e2, int e3, int e4) { return {ratio(num, den), {e1, e2, e3, e4}}; }

} // namespace

OracleResult normalization(double alpha, const QuadSpec &spec) {
    requireSpec(spec);
    Integral in = sectorIntegral([alpha](const Spectrum &l) { return densityValue(l, alpha); }, spec.tolerance);
    OracleResult r{"normalization", 0, 24 * in.value, 24 * in.error, in.evaluations, Convention::Unordered};
    checkTolerance(r, spec.tolerance);
    return r;
}

Convention detectConvention(double alpha, const QuadSpec &spec) {
    double mass = normalization(alpha, spec).value;
    double slack = std::max(1e-6, 10 * spec.tolerance);
    if (std::fabs(mass - 1) <= slack) {
        return Convention::Unordered;
    }
    if (std::fabs(mass / 24 - 1) <= slack) {
        return Convention::Ordered;
    }
    throw ToleranceNotMet("density mass " + std::to_string(mass) + " matches neither labelling convention");
}

OracleResult expectPolynomial(const std::vector<MonomialTerm> &poly, long k, double alpha, const QuadSpec &spec,
                              const std::string &label) {
    requireSpec(spec);
    if (k < 0) {
        throw DomainError("k must be nonnegative");
    }
    int maxExponent = 0;
    std::vector<double> coefficients;
    for (const auto &t : poly) {
        for (int e : t.exponents) {
            if (e < 0) {
                throw DomainError("exponents must be nonnegative");
            }
            maxExponent = std::max(maxExponent, e);
        }
        coefficients.push_back(t.coefficient.get_d());
    }
    const auto &perms = permutations();
    auto f = [&](const Spectrum &l) {
        // Powers table, then the polynomial summed over all relabellings.
        std::array<std::vector<double>, 4> pw;
        for (int i = 0; i < 4; ++i) {
            pw[i].resize(static_cast<std::size_t>(maxExponent) + 1);
            pw[i][0] = 1;
            for (int e = 1; e <= maxExponent; ++e) {
                pw[i][e] = pw[i][e - 1] * l[i];
            }
        }
        double sum = 0;
        for (const auto &p : perms) {
            for (std::size_t t = 0; t < poly.size(); ++t) {
                const auto &e = poly[t].exponents;
                sum += coefficients[t] * pw[p[0]][e[0]] * pw[p[1]][e[1]] * pw[p[2]][e[2]] * pw[p[3]][e[3]];
            }
        }
        double det = std::pow(l[0] * l[1] * l[2] * l[3], static_cast<double>(k));
        return sum * det * densityValue(l, alpha);
    };
    Integral in = sectorIntegral(f, spec.tolerance);
    OracleResult r{label, k, in.value, in.error, in.evaluations, Convention::Unordered};
    checkTolerance(r, spec.tolerance);
    return r;
}

OracleResult expectMonomial(const std::array<int, 4> &exponents, long k, double alpha, const QuadSpec &spec) {
    std::string label = "monomial";
    for (int e : exponents) {
        label += ":" + std::to_string(e);
    }
    return expectPolynomial({{Rational(1), exponents}}, k, alpha, spec, label);
}

const std::vector<MonomialTerm> &ptSquaredPolynomial() {
    static const std::vector<MonomialTerm> poly = {
        term(1, 576, 0, 0, 0, 8),          term(1, 252, 0, 0, 1, 7),         term(-103, 8400, 0, 0, 2, 6),
        term(-89, 6300, 0, 1, 1, 6),       term(-197, 14700, 0, 0, 3, 5),    term(-101, 2450, 0, 1, 2, 5),
        term(-2981, 44100, 1, 1, 1, 5),    term(43091, 2116800, 0, 0, 4, 4), term(289, 9450, 0, 1, 3, 4),
        term(143, 3920, 0, 2, 2, 4),       term(-5641, 44100, 1, 1, 2, 4),   term(433, 22050, 0, 2, 3, 3),
        term(28181, 132300, 1, 1, 3, 3),   term(1091, 2450, 1, 2, 2, 3),     term(59441, 117600, 2, 2, 2, 2),
    };
    return poly;
}

const std::vector<MonomialTerm> &firstThreePolynomial() {
    static const std::vector<MonomialTerm> poly(ptSquaredPolynomial().begin(), ptSquaredPolynomial().begin() + 3);
    return poly;
}

OracleResult expectPtSquared(long k, const QuadSpec &spec) {
    return expectPolynomial(ptSquaredPolynomial(), k, 0.5, spec, "pt-squared");
}

OracleResult expectFirstThree(long k, const QuadSpec &spec) {
    return expectPolynomial(firstThreePolynomial(), k, 0.5, spec, "first-three");
}

Rational closedTermN2(long k) {
    if (k < 0) {
        throw DomainError("k must be a nonnegative integer");
    }
    static const PolynomialQ S = PolynomialQ::fromDescending(
        {2909089792L, 58511409152L, 464093464048L, 1738045720352L, 2166731989792L, -6313467831760L,
         -29574963265176L, -49276400150880L, -38483212259637L, -11376862535850L});
    Rational kk = k;
    Rational num = power(Rational(4), -4 * k - 13) * pochhammer(ratio(-1, 4), k + 1) *
                   pochhammer(ratio(1, 4), k + 1) * S(kk);
    Rational den = 3472875 * (kk + 2) * (kk + 3) * (2 * kk + 1) * (2 * kk + 3) * (2 * kk + 5) *
                   pochhammer(Rational(3), k + 1) * pochhammer(ratio(11, 2), k + 1);
    return -num / den;
}

Rational assembleN2(long k, const Rational &firstThree) { return firstThree + closedTermN2(k); }

double assembleN2(long k, double firstThree) { return firstThree + closedTermN2(k).get_d(); }

} // namespace detmoments
