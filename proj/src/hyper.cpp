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

#include "detmoments/hyper.hpp"

#include "detmoments/errors.hpp"
#include "detmoments/rational_function.hpp"

#include "json.hpp"

#include <algorithm>
#include <optional>

namespace detmoments {

namespace {

std::vector<AffineForm> sorted(std::vector<AffineForm> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::optional<long> minTermination(const std::vector<Rational> &params) {
    std::optional<long> t;
    for (const auto &p : params) {
        if (isNonPositiveInteger(p)) {
            long m = toLong(-p);
            t = t ? std::min(*t, m) : m;
        }
    }
    return t;
}

// A parameter bound in everything but k: value at the bound k plus slope in k.
struct KLinear {
    Rational at;
    Rational slope;
};

std::vector<KLinear> kLinear(const std::vector<AffineForm> &params, const Bindings &b) {
    std::vector<KLinear> out;
    out.reserve(params.size());
    for (const auto &p : params) {
        out.push_back({p.bind(b), p.cK()});
    }
    return out;
}

Rational sumAsRationalFunction(const std::vector<KLinear> &num, const std::vector<KLinear> &den,
                               const Rational &z, long T) {
    // Exact continuation in h = k - k0, evaluated at h = 0 after cancellation.
    RationalFunctionQ term = RationalFunctionQ::constant(1);
    RationalFunctionQ sum = term;
    for (long j = 0; j < T; ++j) {
        PolynomialQ top = PolynomialQ::constant(z);
        PolynomialQ bottom = PolynomialQ::constant(j + 1);
        for (const auto &p : num) {
            top *= PolynomialQ::linear(p.at + j, p.slope);
        }
        for (const auto &p : den) {
            bottom *= PolynomialQ::linear(p.at + j, p.slope);
        }
        if (bottom.isZero()) {
            throw PoleBeforeTermination("k-free denominator parameter vanishes before termination");
        }
        term = term * RationalFunctionQ(top, bottom);
        sum = sum + term;
    }
    if (sum.isPole(0)) {
        throw PoleBeforeTermination("series has a genuine pole in k at the bound value");
    }
    return sum(0);
}

} // namespace

bool operator==(const HyperSeries &a, const HyperSeries &b) {
    return a.argument == b.argument && sorted(a.numerator) == sorted(b.numerator) &&
           sorted(a.denominator) == sorted(b.denominator);
}

BoundSeries bind(const HyperSeries &s, const Bindings &b) {
    BoundSeries out;
    out.argument = s.argument;
    for (const auto &p : s.numerator) {
        out.numerator.push_back(p.bind(b));
    }
    for (const auto &p : s.denominator) {
        out.denominator.push_back(p.bind(b));
    }
    return out;
}

long terminationIndex(const BoundSeries &s) {
    if (s.argument == 0) {
        return 0;
    }
    auto t = minTermination(s.numerator);
    if (!t) {
        throw NotTerminating("no numerator parameter is a nonpositive integer");
    }
    return *t;
}

Rational evaluateTerminating(const BoundSeries &s) {
    long T = terminationIndex(s);
    for (const auto &b : s.denominator) {
        if (isNonPositiveInteger(b) && toLong(-b) < T) {
            throw PoleBeforeTermination("denominator parameter " + toString(b) +
                                        " vanishes before termination at T=" + std::to_string(T));
        }
    }
    Rational term = 1;
    Rational sum = 1;
    for (long j = 0; j < T; ++j) {
        Rational ratio = s.argument / (j + 1);
        for (const auto &a : s.numerator) {
            ratio *= a + j;
        }
        for (const auto &b : s.denominator) {
            ratio /= b + j;
        }
        term *= ratio;
        sum += term;
    }
    return sum;
}

Rational evaluateTerminating(const HyperSeries &s, const Bindings &b) {
    return evaluateTerminating(bind(s, b));
}

Rational evaluateKLimit(const HyperSeries &s, const Bindings &b) {
    if (s.argument == 0) {
        return 1;
    }
    auto num = kLinear(s.numerator, b);
    auto den = kLinear(s.denominator, b);

    std::optional<long> T;
    for (const auto &p : num) {
        if (p.slope == 0 && isNonPositiveInteger(p.at)) {
            long m = toLong(-p.at);
            T = T ? std::min(*T, m) : m;
        }
    }
    if (!T) {
        throw NotTerminating("no k-free numerator parameter is a nonpositive integer");
    }

    // Running term as (product of nonvanishing factors) * h^order, h = k - k0.
    Rational product = 1;
    long order = 0;
    Rational sum = 1;
    for (long j = 0; j < *T; ++j) {
        product *= s.argument;
        product /= j + 1;
        for (const auto &p : num) {
            Rational v = p.at + j;
            if (v == 0) {
                product *= p.slope;
                ++order;
            } else {
                product *= v;
            }
        }
        for (const auto &p : den) {
            Rational v = p.at + j;
            if (v == 0) {
                if (p.slope == 0) {
                    throw PoleBeforeTermination("k-free denominator parameter vanishes before termination");
                }
                product /= p.slope;
                --order;
            } else {
                product /= v;
            }
        }
        if (order < 0) {
            return sumAsRationalFunction(num, den, s.argument, *T);
        }
        if (order == 0) {
            sum += product;
        }
    }
    return sum;
}

AffineForm balanceGap(const HyperSeries &s) {
    AffineForm gap;
    for (const auto &p : s.denominator) {
        gap = gap + p;
    }
    for (const auto &p : s.numerator) {
        gap = gap - p;
    }
    return gap;
}

std::pair<int, int> alphaCount(const HyperSeries &s) {
    auto count = [](const std::vector<AffineForm> &v) {
        return static_cast<int>(std::count_if(v.begin(), v.end(), [](const AffineForm &p) { return p.hasAlpha(); }));
    };
    return {count(s.numerator), count(s.denominator)};
}

std::string serialize(const HyperSeries &s) {
    nlohmann::json j;
    j["p"] = s.numerator.size();
    j["q"] = s.denominator.size();
    j["numerator"] = nlohmann::json::array();
    for (const auto &p : s.numerator) {
        j["numerator"].push_back(p.toString());
    }
    j["denominator"] = nlohmann::json::array();
    for (const auto &p : s.denominator) {
        j["denominator"].push_back(p.toString());
    }
    j["argument"] = toString(s.argument);
    return j.dump(2);
}

HyperSeries parseHyperSeries(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(e.what());
    }
    HyperSeries s;
    for (const auto &p : j.at("numerator")) {
        s.numerator.push_back(AffineForm::parse(p.get<std::string>()));
    }
    for (const auto &p : j.at("denominator")) {
        s.denominator.push_back(AffineForm::parse(p.get<std::string>()));
    }
    s.argument = parseRational(j.at("argument").get<std::string>());
    return s;
}

} // namespace detmoments
