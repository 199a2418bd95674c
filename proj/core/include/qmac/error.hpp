// Copyright 2026 The qmac Authors
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

namespace qmac {

class Error : public std::logic_error {
 public:
  explicit Error(const std::string& message) : std::logic_error(message) {}
};

// Operand shapes or subsystem dimensions do not line up.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message) : Error(message) {}
};

// A scalar argument (probability, index, config field) is out of range.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message) : Error(message) {}
};

// A matrix fails the density-operator / distribution invariants.
class InvalidState : public Error {
 public:
  explicit InvalidState(const std::string& message) : Error(message) {}
};

// A derivative or limit does not exist at the requested point.
class Divergence : public Error {
 public:
  explicit Divergence(const std::string& message) : Error(message) {}
};

// Region construction failed (empty or unbounded intersection).
class GeometryError : public Error {
 public:
  explicit GeometryError(const std::string& message) : Error(message) {}
};

}  // namespace qmac
