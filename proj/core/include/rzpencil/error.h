// Copyright 2026 The rzpencil Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rzpencil {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial, coefficient or file text. `position` is a byte
// offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Incompatible coefficient domains, e.g. sqrt(2) mixed with sqrt(3).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exact path refused because the input exceeds a configured size cap.
class LimitError : public Error {
 public:
  using Error::Error;
};

// A structural conclusion that must hold by construction was violated.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// A semidecision search ran out of candidates without finding a witness.
class NotWitnessedError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace rzpencil
