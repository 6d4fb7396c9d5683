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

#ifndef HERALDQ_METRICS_H
#define HERALDQ_METRICS_H

#include <string>
#include <vector>

#include "heraldq/state.h"
#include "json.hpp"

namespace heraldq {

/// F = |<ideal|real>|^2 / <real|real>. The realistic state is normalized here,
/// so F only measures the shape of the heralded output.
double fidelity(const HybridState &real_state, const HybridState &ideal_state);

/// E = |<ideal|real>|^2 with the heralded output left unnormalized; this
/// additionally charges the probability lost to detector clicks.
double efficiency(const HybridState &real_state, const HybridState &ideal_state);

/// Bipartition: the listed emitters on one side, the photon and every other
/// emitter on the other.
struct Cut {
    std::vector<std::string> emitters;

    /// Photon against all emitters.
    static Cut photon(const RegisterLayout &layout);
};

/// Singular values (descending) of the normalized amplitudes reshaped across
/// the cut.
std::vector<double> schmidt_spectrum(const HybridState &state, const Cut &cut);

/// -sum lambda^2 log2 lambda^2 over the Schmidt spectrum, in bits.
double entanglement_entropy(const HybridState &state, const Cut &cut);
double entropy_from_spectrum(const std::vector<double> &schmidt);

struct MetricsReport {
    double fidelity = 0;
    double efficiency = 0;
    double herald_failure = 0;
    std::vector<double> schmidt;
    double entropy_bits = 0;
};

/// All diagnostics of `real_state` against `ideal_state`, Schmidt data across
/// the photon cut.
MetricsReport evaluate_metrics(const HybridState &real_state, const HybridState &ideal_state);

nlohmann::json to_json(const MetricsReport &report);

}  // namespace heraldq

#endif
