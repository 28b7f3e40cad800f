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

#include "detmoments/affine_form.hpp"

#include "detmoments/errors.hpp"

#include <regex>

namespace detmoments {

AffineForm::AffineForm(Rational c0, Rational ca, Rational ck, Rational cn)
    : c0_(std::move(c0)), ca_(std::move(ca)), ck_(std::move(ck)), cn_(std::move(cn)) {}

std::string AffineForm::toString() const {
    return detmoments::toString(c0_) + " + " + detmoments::toString(ca_) + "*a + " +
           detmoments::toString(ck_) + "*k + " + detmoments::toString(cn_) + "*n";
}

AffineForm AffineForm::parse(std::string_view text) {
    static const std::regex pattern(
        R"(^\s*([-+0-9/]+)\s*\+\s*([-+0-9/]+)\*a\s*\+\s*([-+0-9/]+)\*k\s*\+\s*([-+0-9/]+)\*n\s*$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) {
        throw ParseError("malformed affine form '" + s + "'");
    }
    return AffineForm(parseRational(m[1].str()), parseRational(m[2].str()), parseRational(m[3].str()),
                      parseRational(m[4].str()));
}

bool operator<(const AffineForm &a, const AffineForm &b) {
    if (a.c0_ != b.c0_) {
        return a.c0_ < b.c0_;
    }
    if (a.ca_ != b.ca_) {
        return a.ca_ < b.ca_;
    }
    if (a.ck_ != b.ck_) {
        return a.ck_ < b.ck_;
    }
    return a.cn_ < b.cn_;
}

} // namespace detmoments
