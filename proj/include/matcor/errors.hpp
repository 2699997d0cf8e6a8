// Copyright 2023 The Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace matcor {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad element index, nonpositive weight,
// truncation above the rank, unparsable JSON).
class InputError : public Error {
 public:
  using Error::Error;
};

// Invalid construction parameters such as a composite modulus.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

// Ground set too large for the requested operation.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the mathematical domain of an operation, e.g. a loop
// passed where a non-loop non-coloop element is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A certificate assertion that the theory guarantees failed. Signals a bug.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace matcor
