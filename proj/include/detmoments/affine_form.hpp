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

#include "detmoments/rational.hpp"

#include <string>
#include <string_view>

namespace detmoments {

struct Bindings {
    Rational alpha = 0;
    Rational k = 0;
    Rational n = 0;
};

/// c0 + ca*alpha + ck*k + cn*n with rational coefficients.
class AffineForm {
  public:
    AffineForm() = default;
    explicit AffineForm(Rational c0, Rational ca = 0, Rational ck = 0, Rational cn = 0);

    static AffineForm alpha() { return AffineForm(0, 1, 0, 0); }
    static AffineForm k() { return AffineForm(0, 0, 1, 0); }
    static AffineForm n() { return AffineForm(0, 0, 0, 1); }

    const Rational &c0() const { return c0_; }
    const Rational &cAlpha() const { return ca_; }
    const Rational &cK() const { return ck_; }
    const Rational &cN() const { return cn_; }

    Rational bind(const Bindings &b) const { return c0_ + ca_ * b.alpha + ck_ * b.k + cn_ * b.n; }
    bool hasAlpha() const { return ca_ != 0; }

    /// "c0 + c_a*a + c_k*k + c_n*n"
    std::string toString() const;
    static AffineForm parse(std::string_view text);

    AffineForm operator-() const { return AffineForm(-c0_, -ca_, -ck_, -cn_); }
    friend AffineForm operator+(const AffineForm &a, const AffineForm &b) {
        return AffineForm(a.c0_ + b.c0_, a.ca_ + b.ca_, a.ck_ + b.ck_, a.cn_ + b.cn_);
    }
    friend AffineForm operator-(const AffineForm &a, const AffineForm &b) { return a + (-b); }
    friend AffineForm operator+(const AffineForm &a, const Rational &c) { return a + AffineForm(c); }
    friend AffineForm operator-(const AffineForm &a, const Rational &c) { return a + AffineForm(-c); }
    friend AffineForm operator*(const Rational &s, const AffineForm &a) {
        return AffineForm(s * a.c0_, s * a.ca_, s * a.ck_, s * a.cn_);
    }
    friend bool operator==(const AffineForm &a, const AffineForm &b) {
        return a.c0_ == b.c0_ && a.ca_ == b.ca_ && a.ck_ == b.ck_ && a.cn_ == b.cn_;
    }
    /// Lexicographic order on (c0, ca, ck, cn); used for order-insensitive comparison.
    friend bool operator<(const AffineForm &a, const AffineForm &b);

  private:
    Rational c0_ = 0;
    Rational ca_ = 0;
    Rational ck_ = 0;
    Rational cn_ = 0;
};

} // namespace detmoments
