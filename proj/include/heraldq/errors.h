// Copyright 2026 The heraldq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HERALDQ_ERRORS_H
#define HERALDQ_ERRORS_H

#include <complex>
#include <stdexcept>
#include <string>

namespace heraldq {

using Complex = std::complex<double>;

/// Default absolute tolerance for amplitude comparisons.
inline constexpr double kTolerance = 1e-12;

/// Physical parameter outside its domain (non-positive Purcell factor, bad
/// dimension, gate power out of range, ...).
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Reference to a path or emitter the register layout does not contain, or two
/// states whose layouts disagree.
class LayoutError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A state that violates a numerical invariant (e.g. norm above one).
class ConsistencyError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace heraldq

#endif
