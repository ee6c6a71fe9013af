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

#include "gnmd/error.hpp"

namespace gnmd {

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const DomainError*>(&e)) return "domain_error";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition_error";
  if (dynamic_cast<const InfeasibleInstance*>(&e)) return "infeasible_instance";
  if (dynamic_cast<const RetryLimitExceeded*>(&e)) return "retry_limit_exceeded";
  if (dynamic_cast<const OracleMismatch*>(&e)) return "oracle_mismatch";
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid_argument";
  return "error";
}

}  // namespace gnmd
