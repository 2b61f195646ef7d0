// Copyright 2026 The qcb Authors
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

#ifndef QCB_ERRORS_HPP
#define QCB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcb {

/// Base class for all qcb errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data failed a validation invariant (bad file, bad matrix, bad config).
/// CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical contract was violated at run time. CLI maps these to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotHermitian : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidState : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotBlockDiagonal : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BasisNotAdapted : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonFiniteAmplitude : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotUnitary : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonRealExpectation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BoundsCollapsed : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace qcb

#endif  // QCB_ERRORS_HPP
