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

#include <stdexcept>
#include <string>

namespace detmoments {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define DETMOMENTS_DECLARE_ERROR(Name)                                     \
    class Name : public Error {                                            \
      public:                                                              \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {} \
    }

DETMOMENTS_DECLARE_ERROR(DomainError);
DETMOMENTS_DECLARE_ERROR(NotTerminating);
DETMOMENTS_DECLARE_ERROR(PoleBeforeTermination);
DETMOMENTS_DECLARE_ERROR(UnsupportedScenario);
DETMOMENTS_DECLARE_ERROR(UnsupportedAlpha);
DETMOMENTS_DECLARE_ERROR(NotAvailable);
DETMOMENTS_DECLARE_ERROR(NoFit);
DETMOMENTS_DECLARE_ERROR(AmbiguousFit);
DETMOMENTS_DECLARE_ERROR(PrecisionInsufficient);
DETMOMENTS_DECLARE_ERROR(ToleranceNotMet);
DETMOMENTS_DECLARE_ERROR(ParseError);

#undef DETMOMENTS_DECLARE_ERROR

} // namespace detmoments
