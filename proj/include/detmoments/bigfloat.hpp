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

#include <mpfr.h>

#include <string>

namespace detmoments {

/// Owning handle for an mpfr_t. Arithmetic goes through the mpfr_* calls on get().
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t bits = 64);
    BigFloat(const Rational &q, mpfr_prec_t bits);
    BigFloat(const BigFloat &other);
    BigFloat(BigFloat &&other) noexcept;
    BigFloat &operator=(const BigFloat &other);
    BigFloat &operator=(BigFloat &&other) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    double toDouble() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Scientific rendering with the given significant digits.
    std::string toString(int digits) const;

  private:
    mpfr_t value_;
    bool owned_ = false;
};

} // namespace detmoments
