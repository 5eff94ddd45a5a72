// Copyright 2026 The moebius Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License").
// You may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing,
// software distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions
// and limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace moebius {

// Base class for every error raised by the library. Subclasses name the
// failure mode so callers (and the CLI) can map them to exit codes.
class MoebiusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MOEBIUS_DEFINE_ERROR(Name)              \
  class Name : public MoebiusError {            \
   public:                                      \
    using MoebiusError::MoebiusError;           \
  }

MOEBIUS_DEFINE_ERROR(DivisionByZero);
MOEBIUS_DEFINE_ERROR(NegativeRadicand);
MOEBIUS_DEFINE_ERROR(NonConvergence);
MOEBIUS_DEFINE_ERROR(UnsupportedExpression);
MOEBIUS_DEFINE_ERROR(ParseError);
MOEBIUS_DEFINE_ERROR(ZeroPolynomial);
MOEBIUS_DEFINE_ERROR(DenominatorZero);
MOEBIUS_DEFINE_ERROR(NoSolution);
MOEBIUS_DEFINE_ERROR(OutOfDomain);
MOEBIUS_DEFINE_ERROR(ReferenceMismatch);
MOEBIUS_DEFINE_ERROR(CertFailed);
MOEBIUS_DEFINE_ERROR(SchemaError);
MOEBIUS_DEFINE_ERROR(GeometryError);
MOEBIUS_DEFINE_ERROR(GenericityViolation);
MOEBIUS_DEFINE_ERROR(ToleranceExceeded);
MOEBIUS_DEFINE_ERROR(RetriesExhausted);
MOEBIUS_DEFINE_ERROR(InvalidPattern);
MOEBIUS_DEFINE_ERROR(DegenerateMesh);

#undef MOEBIUS_DEFINE_ERROR

}  // namespace moebius
