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

#ifndef CIMAT_ERRORS_H_
#define CIMAT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cimat {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ground set or an exhaustive routine was asked to exceed its size bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An argument was outside the documented range (e.g. uniform(4, 3)).
class RangeError : public Error {
 public:
  using Error::Error;
};

// The input does not satisfy an axiom system the operation requires.
// what() carries the first violation witness.
class AxiomError : public Error {
 public:
  using Error::Error;
};

// A matroid with loops was passed where a loopless one is required.
class LoopError : public Error {
 public:
  LoopError(int element, const std::string& msg)
      : Error(msg), element_(element) {}
  // 1-based label of the offending element.
  int element() const { return element_; }

 private:
  int element_;
};

// An internal invariant that the theory guarantees was found broken.
// Reaching this on valid input means the implementation is wrong.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Numeric precondition failures (not symmetric, not positive definite,
// not submodular, zero rank).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace cimat

#endif  // CIMAT_ERRORS_H_
