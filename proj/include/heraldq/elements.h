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

#ifndef HERALDQ_ELEMENTS_H
#define HERALDQ_ELEMENTS_H

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "heraldq/scattering.h"
#include "heraldq/state.h"

namespace heraldq {

enum class PolFilter : std::uint8_t { H, V, Both };

/// Balanced beam splitter (1/sqrt2)[[1, 1], [1, -1]] on the (p1, p2) amplitudes.
struct BeamSplitter {
    std::string p1;
    std::string p2;
    bool operator==(const BeamSplitter &) const = default;
};

/// Lossless PBS: H on in1 -> out1, V on in1 -> out2, H on in2 -> out2,
/// V on in2 -> out1. {out1, out2} must be the same set as {in1, in2}.
struct PolarizingBeamSplitter {
    std::string in1;
    std::string in2;
    std::string out1;
    std::string out2;
    bool operator==(const PolarizingBeamSplitter &) const = default;
};

/// Half-wave plate at 45 degrees: H <-> V on one path.
struct HalfWavePlate {
    std::string path;
    bool operator==(const HalfWavePlate &) const = default;
};

struct PhaseShift {
    std::string path;
    PolFilter filter = PolFilter::Both;
    double theta = 0;
    bool operator==(const PhaseShift &) const = default;
};

/// Heralded error-detected union of an emitter with one path.
struct EmitterUnion {
    std::string emitter;
    std::string path;
    bool operator==(const EmitterUnion &) const = default;
};

using CircuitElement = std::variant<BeamSplitter, PolarizingBeamSplitter, HalfWavePlate, PhaseShift, EmitterUnion>;

struct Circuit {
    std::shared_ptr<const RegisterLayout> layout;
    std::vector<CircuitElement> elements;

    /// Throws LayoutError/DomainError for the first invalid element.
    void validate() const;

    std::size_t union_count() const;
};

void validate_element(const CircuitElement &element, const RegisterLayout &layout);

HybridState apply_bs(const HybridState &state, std::string_view p1, std::string_view p2);
HybridState apply_pbs(
    const HybridState &state, std::string_view in1, std::string_view in2, std::string_view out1, std::string_view out2);
HybridState apply_hwp45(const HybridState &state, std::string_view path);
HybridState apply_phase(const HybridState &state, std::string_view path, PolFilter filter, double theta);

/// Applies one element; EmitterUnion consumes `r`.
HybridState apply_element(const HybridState &state, const CircuitElement &element, Complex r);

/// Runs the elements in order.
HybridState run_circuit(const Circuit &circuit, const ScatteringParams &params, const HybridState &initial);
HybridState run_circuit(const Circuit &circuit, Complex r, const HybridState &initial);

std::string describe(const CircuitElement &element);

}  // namespace heraldq

#endif
