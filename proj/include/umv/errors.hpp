// Copyright 2026 The Authors.
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

#ifndef UMV_ERRORS_HPP_
#define UMV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace umv {

// An element id outside the ground set, or an argument outside a domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A caller broke an operation's precondition (e.g. passed a non-basis where a
// basis is required).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal consistency check failed. Always a bug.
class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive enumeration refused because the instance is too large.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace umv

#endif  // UMV_ERRORS_HPP_
