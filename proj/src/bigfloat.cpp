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

#include "detmoments/bigfloat.hpp"

#include <utility>
#include <vector>

namespace detmoments {

BigFloat::BigFloat(mpfr_prec_t bits) : owned_(true) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational &q, mpfr_prec_t bits) : owned_(true) {
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat &other) : owned_(true) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept : owned_(other.owned_) {
    // mpfr_t is a one-element array; moving means stealing the limb pointer.
    value_[0] = other.value_[0];
    other.owned_ = false;
}

BigFloat &BigFloat::operator=(const BigFloat &other) {
    if (this != &other) {
        if (!owned_) {
            mpfr_init2(value_, other.precision());
            owned_ = true;
        } else {
            mpfr_set_prec(value_, other.precision());
        }
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept {
    if (this != &other) {
        std::swap(value_[0], other.value_[0]);
        std::swap(owned_, other.owned_);
    }
    return *this;
}

BigFloat::~BigFloat() {
    if (owned_) {
        mpfr_clear(value_);
    }
}

std::string BigFloat::toString(int digits) const {
    int size = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
    std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
    mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", digits - 1, value_);
    return std::string(buffer.data());
}

} // namespace detmoments
