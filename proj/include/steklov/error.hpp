// Copyright 2026 The Steklov Cuboid Authors
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

namespace steklov {

/// Invalid caller input (out-of-range index, malformed cuboid, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested value does not exist in the numerical domain: evaluation at
/// a pole, an inverse with no solution, a quadratic without a positive root.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A root finder failed to converge. Carries the last bracket.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : std::runtime_error(what + " [bracket " + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]"),
        lo_(lo),
        hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace steklov
