// Copyright 2026 The spinchain Authors
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

namespace spinchain {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix would exceed the supported dimension (64).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A qubit index is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition (shape, hermiticity, overlap...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A scalar function was evaluated outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A constructed state is not positive semidefinite.
class PositivityError : public Error {
 public:
  PositivityError(const std::string& what, double bound)
      : Error(what), bound_(bound) {}

  /// Admissible bound (alpha_max) or offending eigenvalue, depending on origin.
  double bound() const noexcept { return bound_; }

 private:
  double bound_;
};

/// A reduced single-qubit state is not diagonal (Local Gibbs Criterion).
class LgcError : public Error {
 public:
  using Error::Error;
};

/// A two-qubit gate touches a pair absent from the coupling map.
class LayoutError : public Error {
 public:
  using Error::Error;
};

/// An optimizer failed to reach its declared tolerance.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinchain
