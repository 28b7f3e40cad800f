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

#include "detmoments/polynomial.hpp"

#include "detmoments/errors.hpp"

#include <algorithm>

namespace detmoments {

PolynomialQ::PolynomialQ(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

PolynomialQ PolynomialQ::constant(const Rational &c) { return PolynomialQ({c}); }

PolynomialQ PolynomialQ::linear(const Rational &a, const Rational &b) { return PolynomialQ({a, b}); }

PolynomialQ PolynomialQ::fromDescending(std::initializer_list<long> coefficients) {
    std::vector<Rational> c;
    c.reserve(coefficients.size());
    for (long v : coefficients) {
        c.emplace_back(v);
    }
    std::reverse(c.begin(), c.end());
    return PolynomialQ(std::move(c));
}

PolynomialQ PolynomialQ::fromLinearFactors(const std::vector<std::pair<Rational, Rational>> &factors) {
    PolynomialQ p = constant(1);
    for (const auto &[a, b] : factors) {
        p *= linear(a, b);
    }
    return p;
}

void PolynomialQ::trim() {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

Rational PolynomialQ::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) {
        return 0;
    }
    return c_[static_cast<std::size_t>(i)];
}

Rational PolynomialQ::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational PolynomialQ::operator()(const Rational &x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

PolynomialQ PolynomialQ::operator-() const {
    PolynomialQ r = *this;
    for (auto &c : r.c_) {
        c = -c;
    }
    return r;
}

PolynomialQ &PolynomialQ::operator+=(const PolynomialQ &o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

PolynomialQ &PolynomialQ::operator-=(const PolynomialQ &o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    trim();
    return *this;
}

PolynomialQ &PolynomialQ::operator*=(const PolynomialQ &o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(r);
    trim();
    return *this;
}

PolynomialQ &PolynomialQ::operator*=(const Rational &s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto &c : c_) {
        c *= s;
    }
    return *this;
}

std::pair<PolynomialQ, PolynomialQ> PolynomialQ::divmod(const PolynomialQ &a, const PolynomialQ &b) {
    if (b.isZero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    int da = a.degree();
    if (da < db) {
        return {PolynomialQ(), a};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
    Rational lead = b.leading();
    for (int i = da - db; i >= 0; --i) {
        Rational f = rem[static_cast<std::size_t>(i + db)] / lead;
        quot[static_cast<std::size_t>(i)] = f;
        if (f == 0) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
    }
    return {PolynomialQ(std::move(quot)), PolynomialQ(std::move(rem))};
}

PolynomialQ PolynomialQ::monic() const {
    if (c_.empty()) {
        return *this;
    }
    PolynomialQ r = *this;
    r *= Rational(1 / leading());
    return r;
}

PolynomialQ PolynomialQ::gcd(PolynomialQ a, PolynomialQ b) {
    a = a.monic();
    b = b.monic();
    while (!b.isZero()) {
        PolynomialQ r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PolynomialQ PolynomialQ::shifted(const Rational &delta) const {
    // Horner in the shifted variable: p(x + d) = (...(c_n (x+d) + c_{n-1})(x+d) ...)
    PolynomialQ acc;
    PolynomialQ step = linear(delta, 1);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= step;
        acc += constant(*it);
    }
    return acc;
}

PolynomialQ PolynomialQ::power(unsigned e) const {
    PolynomialQ result = constant(1);
    PolynomialQ base = *this;
    while (e > 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Integer PolynomialQ::denominatorLcm() const {
    Integer l = 1;
    for (const auto &c : c_) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    return l;
}

Integer PolynomialQ::integerContent() const {
    Integer l = denominatorLcm();
    Integer g = 0;
    for (const auto &c : c_) {
        Rational scaled = c * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
    }
    return g;
}

std::string PolynomialQ::toString(const std::string &var) const {
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational &c = c_[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (out.empty()) {
            out += sgn(c) < 0 ? "-" : "";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        bool unit = mag == 1 && i > 0;
        if (!unit) {
            out += detmoments::toString(mag);
            if (i > 0) {
                out += "*";
            }
        }
        if (i >= 1) {
            out += var;
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace detmoments
