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

#ifndef HERALDQ_SCATTERING_H
#define HERALDQ_SCATTERING_H

#include <string_view>

#include "heraldq/errors.h"
#include "heraldq/state.h"

namespace heraldq {

/// Operating point of one emitter-waveguide system. Only the ratios enter:
/// purcell = gamma_1D / gamma', detuning = Delta / gamma_1D.
struct ScatteringParams {
    double purcell = 40.0;
    double detuning = 0.0;

    /// Throws DomainError unless purcell is finite and > 0 and detuning finite.
    void validate() const;
};

struct ReflectionCoefficients {
    Complex r;
    Complex t;  // always 1 + r
};

/// r = -1 / (1 + 1/P - 2i*detuning), t = 1 + r.
ReflectionCoefficients reflection_coefficient(const ScatteringParams &params);

/// Heralded (no-click) branch of the error-detected union of `emitter` with the
/// photon on `path`. Every component on that path picks up r * sigma_z(g) on
/// the emitter and an H<->V flip; in the stored +/- basis that is a factor -r
/// with the emitter bit flipped. Components on other paths are untouched and
/// the failure amplitude is dropped.
HybridState union_scatter(const HybridState &state, std::string_view emitter, std::string_view path, Complex r);
HybridState union_scatter(const HybridState &state, std::size_t emitter, std::size_t path, Complex r);

/// 1 - <state|state>; ConsistencyError if the norm exceeds one by more than 1e-12.
double heralded_failure_probability(const HybridState &state);

}  // namespace heraldq

#endif
