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

#include "heraldq/elements.h"

#include <charconv>
#include <cmath>

#include "heraldq/simd/kernels.h"

namespace heraldq {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

void copy_block(std::span<Complex> dst, std::span<const Complex> src) {
    std::copy(src.begin(), src.end(), dst.begin());
}

std::string format_angle(double theta) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), theta);
    return std::string(buf, res.ptr);
}

const char *filter_name(PolFilter f) {
    switch (f) {
        case PolFilter::H:
            return "H";
        case PolFilter::V:
            return "V";
        case PolFilter::Both:
            break;
    }
    return "*";
}

}  // namespace

void validate_element(const CircuitElement &element, const RegisterLayout &layout) {
    std::visit(
        Overloaded{
            [&](const BeamSplitter &e) {
                if (layout.path_index(e.p1) == layout.path_index(e.p2)) {
                    throw LayoutError("BS needs two different paths");
                }
            },
            [&](const PolarizingBeamSplitter &e) {
                auto i1 = layout.path_index(e.in1);
                auto i2 = layout.path_index(e.in2);
                auto o1 = layout.path_index(e.out1);
                auto o2 = layout.path_index(e.out2);
                if (i1 == i2 || o1 == o2) {
                    throw LayoutError("PBS ports must name two different paths on each side");
                }
                if (!((o1 == i1 && o2 == i2) || (o1 == i2 && o2 == i1))) {
                    throw LayoutError("PBS outputs must be the same pair of paths as its inputs");
                }
            },
            [&](const HalfWavePlate &e) {
                layout.path_index(e.path);
            },
            [&](const PhaseShift &e) {
                layout.path_index(e.path);
                if (!std::isfinite(e.theta)) {
                    throw DomainError("phase shift angle must be finite");
                }
            },
            [&](const EmitterUnion &e) {
                layout.emitter_index(e.emitter);
                layout.path_index(e.path);
            },
        },
        element);
}

void Circuit::validate() const {
    if (!layout) {
        throw LayoutError("circuit has no layout");
    }
    for (const auto &e : elements) {
        validate_element(e, *layout);
    }
}

std::size_t Circuit::union_count() const {
    std::size_t n = 0;
    for (const auto &e : elements) {
        n += std::holds_alternative<EmitterUnion>(e);
    }
    return n;
}

HybridState apply_bs(const HybridState &state, std::string_view p1, std::string_view p2) {
    validate_element(BeamSplitter{std::string(p1), std::string(p2)}, state.layout());
    const auto &layout = state.layout();
    const auto a = layout.path_index(p1);
    const auto b = layout.path_index(p2);
    HybridState out = state;
    for (auto pol : {Polarization::H, Polarization::V}) {
        auto x = out.block(pol, a);
        auto y = out.block(pol, b);
        simd::active_kernels().butterfly(x.data(), y.data(), x.size());
    }
    return out;
}

HybridState apply_pbs(
    const HybridState &state, std::string_view in1, std::string_view in2, std::string_view out1, std::string_view out2) {
    validate_element(
        PolarizingBeamSplitter{std::string(in1), std::string(in2), std::string(out1), std::string(out2)}, state.layout());
    const auto &layout = state.layout();
    const auto i1 = layout.path_index(in1);
    const auto i2 = layout.path_index(in2);
    const auto o1 = layout.path_index(out1);
    const auto o2 = layout.path_index(out2);
    HybridState out = state;
    copy_block(out.block(Polarization::H, o1), state.block(Polarization::H, i1));
    copy_block(out.block(Polarization::V, o2), state.block(Polarization::V, i1));
    copy_block(out.block(Polarization::H, o2), state.block(Polarization::H, i2));
    copy_block(out.block(Polarization::V, o1), state.block(Polarization::V, i2));
    return out;
}

HybridState apply_hwp45(const HybridState &state, std::string_view path) {
    const auto p = state.layout().path_index(path);
    HybridState out = state;
    copy_block(out.block(Polarization::H, p), state.block(Polarization::V, p));
    copy_block(out.block(Polarization::V, p), state.block(Polarization::H, p));
    return out;
}

HybridState apply_phase(const HybridState &state, std::string_view path, PolFilter filter, double theta) {
    validate_element(PhaseShift{std::string(path), filter, theta}, state.layout());
    const auto p = state.layout().path_index(path);
    const Complex factor = std::polar(1.0, theta);
    HybridState out = state;
    const auto &k = simd::active_kernels();
    if (filter != PolFilter::V) {
        auto blk = out.block(Polarization::H, p);
        k.scale(blk.data(), blk.size(), factor);
    }
    if (filter != PolFilter::H) {
        auto blk = out.block(Polarization::V, p);
        k.scale(blk.data(), blk.size(), factor);
    }
    return out;
}

HybridState apply_element(const HybridState &state, const CircuitElement &element, Complex r) {
    return std::visit(
        Overloaded{
            [&](const BeamSplitter &e) {
                return apply_bs(state, e.p1, e.p2);
            },
            [&](const PolarizingBeamSplitter &e) {
                return apply_pbs(state, e.in1, e.in2, e.out1, e.out2);
            },
            [&](const HalfWavePlate &e) {
                return apply_hwp45(state, e.path);
            },
            [&](const PhaseShift &e) {
                return apply_phase(state, e.path, e.filter, e.theta);
            },
            [&](const EmitterUnion &e) {
                return union_scatter(state, e.emitter, e.path, r);
            },
        },
        element);
}

HybridState run_circuit(const Circuit &circuit, Complex r, const HybridState &initial) {
    circuit.validate();
    if (!(initial.layout() == *circuit.layout)) {
        throw LayoutError("initial state does not match the circuit layout");
    }
    HybridState state = initial;
    for (const auto &e : circuit.elements) {
        state = apply_element(state, e, r);
    }
    return state;
}

HybridState run_circuit(const Circuit &circuit, const ScatteringParams &params, const HybridState &initial) {
    return run_circuit(circuit, reflection_coefficient(params).r, initial);
}

std::string describe(const CircuitElement &element) {
    return std::visit(
        Overloaded{
            [](const BeamSplitter &e) {
                return "BS " + e.p1 + " " + e.p2;
            },
            [](const PolarizingBeamSplitter &e) {
                return "PBS " + e.in1 + " " + e.in2 + " " + e.out1 + " " + e.out2;
            },
            [](const HalfWavePlate &e) {
                return "HWP " + e.path;
            },
            [](const PhaseShift &e) {
                return "PS " + e.path + " " + filter_name(e.filter) + " " + format_angle(e.theta);
            },
            [](const EmitterUnion &e) {
                return "SCATTER " + e.emitter + " " + e.path;
            },
        },
        element);
}

}  // namespace heraldq
