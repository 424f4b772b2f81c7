// Copyright 2026 The trigpow authors
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

namespace trigpow {

// Base error. `code()` is a stable machine-readable identifier; the CLI maps
// error categories to exit codes (1 for input/domain problems, 2 for internal
// invariant violations).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Bad input or a precondition violation: zero denominator, rational input
// where an irrational form is required, N = 0, empty interval, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested computation cannot be certified at the precision the input
// carries (e.g. a truncated decimal driven past its stated precision).
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what)
      : Error("precision_exhausted", what) {}
};

// An internal consistency check failed. Signals a bug, not a math failure.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace trigpow
