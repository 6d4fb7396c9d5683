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

#include "heraldq/metrics.h"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "heraldq/scattering.h"

namespace heraldq {

namespace {

double overlap_squared(const HybridState &real_state, const HybridState &ideal_state) {
    double ideal_norm = ideal_state.norm_squared();
    if (std::abs(ideal_norm - 1.0) > 1e-9) {
        throw ConsistencyError("ideal state must have unit norm");
    }
    return std::norm(inner_product(ideal_state, real_state));
}

}  // namespace

double fidelity(const HybridState &real_state, const HybridState &ideal_state) {
    require_same_layout(real_state, ideal_state);
    double norm = real_state.norm_squared();
    if (!(norm > 0)) {
        throw DomainError("realistic state has zero norm");
    }
    return std::min(1.0, overlap_squared(real_state, ideal_state) / norm);
}

double efficiency(const HybridState &real_state, const HybridState &ideal_state) {
    require_same_layout(real_state, ideal_state);
    return overlap_squared(real_state, ideal_state);
}

Cut Cut::photon(const RegisterLayout &layout) {
    return Cut{layout.emitters()};
}

std::vector<double> schmidt_spectrum(const HybridState &state, const Cut &cut) {
    const RegisterLayout &layout = state.layout();
    if (cut.emitters.empty()) {
        throw LayoutError("cut must put at least one emitter on the far side");
    }
    std::uint64_t far_mask = 0;
    std::unordered_set<std::string> seen;
    for (const auto &name : cut.emitters) {
        if (!seen.insert(name).second) {
            throw LayoutError("emitter '" + name + "' listed twice in cut");
        }
        far_mask |= layout.emitter_mask(layout.emitter_index(name));
    }
    const double norm = state.norm_squared();
    if (!(norm > 0)) {
        throw DomainError("state has zero norm");
    }

    // Column index packs the far-side emitter bits, row index packs
    // (pol, path, near-side emitter bits).
    const int n_far = static_cast<int>(cut.emitters.size());
    const int n_near = static_cast<int>(layout.n_emitters()) - n_far;
    const std::size_t cols = std::size_t{1} << n_far;
    const std::size_t rows = 2 * layout.n_paths() * (std::size_t{1} << n_near);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    const double scale = 1.0 / std::sqrt(norm);
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (state[i] == Complex{}) {
            continue;
        }
        BasisLabel label = layout.label(i);
        std::size_t near = 0;
        std::size_t far = 0;
        for (std::size_t e = 0; e < layout.n_emitters(); ++e) {
            std::uint64_t bit = layout.emitter_mask(e);
            if (far_mask & bit) {
                far = (far << 1) | ((label.bits & bit) ? 1 : 0);
            } else {
                near = (near << 1) | ((label.bits & bit) ? 1 : 0);
            }
        }
        std::size_t photon = static_cast<std::size_t>(label.pol) * layout.n_paths() + label.path;
        std::size_t row = (photon << n_near) | near;
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(far)) = state[i] * scale;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto &sv = svd.singularValues();
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double entropy_from_spectrum(const std::vector<double> &schmidt) {
    double h = 0;
    for (double s : schmidt) {
        double p = s * s;
        if (p > 1e-300) {
            h -= p * std::log2(p);
        }
    }
    return std::max(0.0, h);
}

double entanglement_entropy(const HybridState &state, const Cut &cut) {
    return entropy_from_spectrum(schmidt_spectrum(state, cut));
}

MetricsReport evaluate_metrics(const HybridState &real_state, const HybridState &ideal_state) {
    MetricsReport r;
    r.fidelity = fidelity(real_state, ideal_state);
    r.efficiency = efficiency(real_state, ideal_state);
    r.herald_failure = heralded_failure_probability(real_state);
    if (real_state.layout().n_emitters() > 0) {
        r.schmidt = schmidt_spectrum(real_state, Cut::photon(real_state.layout()));
        r.entropy_bits = entropy_from_spectrum(r.schmidt);
    } else {
        r.schmidt = {1.0};
    }
    return r;
}

nlohmann::json to_json(const MetricsReport &report) {
    return {
        {"fidelity", report.fidelity},
        {"efficiency", report.efficiency},
        {"herald_failure", report.herald_failure},
        {"schmidt", report.schmidt},
        {"entropy_bits", report.entropy_bits},
    };
}

}  // namespace heraldq
