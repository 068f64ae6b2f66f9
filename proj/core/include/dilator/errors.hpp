// Copyright 2026 The dilator Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DILATOR_ERRORS_HPP_
#define DILATOR_ERRORS_HPP_

#include <stdexcept>

namespace dilator {

// Argument outside the domain of an operation (invalid token, set not
// contained in another, embedding not order preserving, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An optional capability (enumeration, normal structure) is missing.
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A certified input was required and not supplied, or a certified object
// misbehaved at runtime.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed textual input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dilator

#endif  // DILATOR_ERRORS_HPP_
