// Copyright 2026 The frobkit Authors
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

namespace frobkit {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial or ideal text. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Mathematically invalid request: ring mismatch, f not in m for nu, bad prime...
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exponent (or p^e) left the representable range.
class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured resource budget (pair reductions, iteration count) ran out.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace frobkit
