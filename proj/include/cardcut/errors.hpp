// Copyright 2026 The cardcut Authors.
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

namespace cardcut {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document; the message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Enumeration refused because the instance exceeds the configured guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A library invariant broke. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cardcut
