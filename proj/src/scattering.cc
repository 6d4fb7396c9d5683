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

#include "heraldq/scattering.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "heraldq/simd/kernels.h"

namespace heraldq {

void ScatteringParams::validate() const {
    if (!std::isfinite(purcell) || purcell <= 0) {
        throw DomainError("purcell factor must be finite and positive");
    }
    if (!std::isfinite(detuning)) {
        throw DomainError("detuning must be finite");
    }
}

ReflectionCoefficients reflection_coefficient(const ScatteringParams &params) {
    params.validate();
    Complex r = -1.0 / Complex(1.0 + 1.0 / params.purcell, -2.0 * params.detuning);
    return {r, r + 1.0};
}

HybridState union_scatter(const HybridState &state, std::size_t emitter, std::size_t path, Complex r) {
    const RegisterLayout &layout = state.layout();
    if (emitter >= layout.n_emitters()) {
        throw LayoutError("emitter index out of range");
    }
    if (path >= layout.n_paths()) {
        throw LayoutError("path index out of range");
    }
    const auto &k = simd::active_kernels();
    const std::size_t n = layout.block_size();
    const std::size_t mask = static_cast<std::size_t>(layout.emitter_mask(emitter));

    HybridState out = state;
    auto h_in = state.block(Polarization::H, path);
    auto v_in = state.block(Polarization::V, path);
    k.scale_xor_copy(out.block(Polarization::V, path).data(), h_in.data(), n, mask, -r);
    k.scale_xor_copy(out.block(Polarization::H, path).data(), v_in.data(), n, mask, -r);
    return out;
}

HybridState union_scatter(const HybridState &state, std::string_view emitter, std::string_view path, Complex r) {
    return union_scatter(state, state.layout().emitter_index(emitter), state.layout().path_index(path), r);
}

double heralded_failure_probability(const HybridState &state) {
    double norm = state.norm_squared();
    if (norm > 1.0 + kTolerance) {
        throw ConsistencyError("state norm exceeds one");
    }
    return std::max(0.0, 1.0 - norm);
}

}  // namespace heraldq
