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

#ifndef GAMMOID_ERROR_HPP_
#define GAMMOID_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gammoid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An identifier that names no declared vertex.
class ReferenceError : public Error {
 public:
  using Error::Error;
};

/// Inadmissible generator or operation parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the ground set is too large.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Input has the wrong structural mode (e.g. not a tree).
class ModeError : public Error {
 public:
  using Error::Error;
};

/// A self-check inside an algorithm failed. Always a bug signal.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gammoid

#endif  // GAMMOID_ERROR_HPP_
