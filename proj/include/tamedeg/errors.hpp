// Copyright 2026 The tamedeg Authors
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

#ifndef TAMEDEG_ERRORS_HPP
#define TAMEDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tamedeg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// valuation/degree queries on the zero element.
class UndefinedForZero : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Evaluation at t = 0 of an element carrying a negative power of t.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the range of the machine integer type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// exp(h*delta) requested with delta(h) != 0.
class KernelViolation : public Error {
 public:
  using Error::Error;
};

/// A coefficient that must be a unit of the active ring is not.
class NonUnitError : public Error {
 public:
  using Error::Error;
};

class NotTriangular : public Error {
 public:
  using Error::Error;
};

class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tamedeg

#endif  // TAMEDEG_ERRORS_HPP
