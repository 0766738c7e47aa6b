/* Copyright 2026 The frobsq Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef FROBSQ_ERRORS_HPP_
#define FROBSQ_ERRORS_HPP_

#include <stdexcept>

namespace frobsq {

// Input outside an operation's mathematical domain (non-prime-power q,
// Hasse violation, mismatched field contexts, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured size guard would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

// Something that cannot happen for valid inputs did happen.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace frobsq

#endif  // FROBSQ_ERRORS_HPP_
