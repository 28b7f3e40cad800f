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

#include "detmoments/rational.hpp"

#include "detmoments/errors.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <vector>

namespace detmoments {

Rational ratio(long num, long den) {
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

std::string trimmed(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) {
        --e;
    }
    return std::string(text.substr(b, e - b));
}

Rational parseDecimal(const std::string &s) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    std::string digits;
    long scale = 0;
    bool seenPoint = false;
    bool seenDigit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seenDigit = true;
            if (seenPoint) {
                --scale;
            }
        } else if (c == '.' && !seenPoint) {
            seenPoint = true;
        } else {
            break;
        }
    }
    if (!seenDigit) {
        throw ParseError("not a number: '" + s + "'");
    }
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') {
            throw ParseError("not a number: '" + s + "'");
        }
        ++i;
        std::string exponent = s.substr(i);
        if (exponent.empty()) {
            throw ParseError("missing exponent in '" + s + "'");
        }
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(exponent, &used);
        } catch (const std::exception &) {
            throw ParseError("bad exponent in '" + s + "'");
        }
        if (used != exponent.size()) {
            throw ParseError("bad exponent in '" + s + "'");
        }
        scale += e;
    }
    Integer mantissa(digits, 10);
    Integer ten = 10;
    Integer shift;
    mpz_pow_ui(shift.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(scale)));
    Rational q = scale >= 0 ? Rational(mantissa * shift) : Rational(mantissa, shift);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

} // namespace

Rational parseRational(std::string_view text) {
    std::string s = trimmed(text);
    if (s.empty()) {
        throw ParseError("empty rational");
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational num = parseDecimal(trimmed(s.substr(0, slash)));
        Rational den = parseDecimal(trimmed(s.substr(slash + 1)));
        if (den == 0) {
            throw ParseError("zero denominator in '" + s + "'");
        }
        return num / den;
    }
    return parseDecimal(s);
}

std::string toString(const Rational &q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string toDecimal(const Rational &q, int digits) {
    if (digits < 1) {
        digits = 1;
    }
    mpfr_t x;
    mpfr_init2(x, static_cast<mpfr_prec_t>(digits * 3.33) + 64);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    int size = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, x);
    std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
    mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", digits, x);
    mpfr_clear(x);
    return std::string(buffer.data());
}

bool isInteger(const Rational &q) { return q.get_den() == 1; }

bool isNonPositiveInteger(const Rational &q) { return isInteger(q) && sgn(q) <= 0; }

Rational pochhammer(const Rational &x, long m) {
    if (m < 0) {
        throw DomainError("negative Pochhammer length");
    }
    Rational result = 1;
    Rational factor = x;
    for (long i = 0; i < m; ++i) {
        result *= factor;
        factor += 1;
    }
    return result;
}

Rational power(const Rational &base, long exponent) {
    if (exponent < 0) {
        if (base == 0) {
            throw DomainError("zero to a negative power");
        }
        return 1 / power(base, -exponent);
    }
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

long toLong(const Rational &q) {
    if (!isInteger(q) || !q.get_num().fits_slong_p()) {
        throw DomainError("expected a machine-size integer, got " + toString(q));
    }
    return q.get_num().get_si();
}

} // namespace detmoments
