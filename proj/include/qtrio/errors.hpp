// Copyright 2026 The qtrio developers
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

namespace qtrio {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state vector whose norm deviates from 1 beyond the structural tolerance.
class NormalizationError : public Error {
 public:
  NormalizationError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}

  /// |  ||psi||^2 - 1  | of the offending input.
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/// An all-zero (or non-finite) amplitude vector that cannot be normalized.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// A parameter outside its documented domain (e.g. m outside [0, 1]).
class ParameterRangeError : public Error {
 public:
  using Error::Error;
};

/// A density matrix with an eigenvalue/determinant negative beyond tolerance.
class PositivityError : public Error {
 public:
  using Error::Error;
};

/// A matrix whose Hermiticity residue exceeds tolerance.
class HermiticityError : public Error {
 public:
  using Error::Error;
};

/// Concurrence-triangle factor negative beyond tolerance. Never fires for
/// valid pure states; indicates corrupted side lengths.
class TriangleInequalityError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (state files, inline amplitude lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure; the message carries the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtrio
