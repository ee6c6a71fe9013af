// Copyright 2026 The gnmd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GNMD_ERROR_HPP_
#define GNMD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gnmd {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition does not hold (e.g. asking for the giant
// component of a subcritical law).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// No graph exists for the requested (n, m, d).
class InfeasibleInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rejection loop hit its retry cap.
class RetryLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The sampler produced a graph the enumeration oracle does not know about.
class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Short machine-readable tag for an exception, used in CLI error lines.
std::string error_kind(const std::exception& e);

}  // namespace gnmd

#endif  // GNMD_ERROR_HPP_
