// Copyright 2026 The qmagic Authors
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

namespace qmagic {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input or configuration; nothing was computed.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionCapError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Phase-space point operators and Wigner functions exist for odd d only.
class EvenDimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonCommutingGenerators : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DependentGenerators : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A numerical invariant that must hold by construction was violated.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmagic
