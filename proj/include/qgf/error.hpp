// Copyright 2026 The qgroup-frt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGF_ERROR_HPP
#define QGF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qgf {

enum class ErrorCode {
  InvalidArgument = 1,
  DivisionByZero,
  ZeroElement,
  FieldMismatch,
  REqualsOne,
  ZeroParameter,
  MissingParameter,
  DimensionMismatch,
  SingularMatrix,
  ConventionAmbiguous,
  IndexOutOfRange,
  FormalModeUnsupported,
  ParseError,
  ValidationError,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// C API maps them one-to-one onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qgf

#endif
