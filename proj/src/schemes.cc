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

#include "heraldq/schemes.h"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>

namespace heraldq {

namespace {

Complex ipow(Complex base, int e) {
    Complex out{1.0};
    for (int i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

int mod(int a, int d) {
    int r = a % d;
    return r < 0 ? r + d : r;
}

std::string path_name(char prefix, int i) {
    return std::string(1, prefix) + std::to_string(i + 1);
}

// Operations from |phi_0pp> to |phi_kpq>; rows k = 0..3, columns pq = 00..33.
constexpr std::array<std::array<std::string_view, 16>, 4> kTable2{{
    {"Z⁰", "X", "X²", "X†", "X†", "Z⁰", "X", "X²", "X²", "X†", "Z⁰", "X", "X", "X²", "X†", "Z⁰"},
    {"Z", "XZ", "X²Z", "X†Z", "X†Z", "Z", "XZ", "X²Z", "X²Z", "X†Z", "Z", "XZ", "XZ", "X²Z", "X†Z", "Z"},
    {"Z²", "XZ²", "X²Z²", "X†Z²", "X†Z²", "Z²", "XZ²", "X²Z²", "X²Z²", "X†Z²", "Z²", "XZ²", "XZ²", "X²Z²", "X†Z²",
     "Z²"},
    {"Z†", "XZ†", "X²Z†", "X†Z†", "X†Z†", "Z†", "XZ†", "X²Z†", "X²Z†", "X†Z†", "Z†", "XZ†", "XZ†", "X²Z†", "X†Z†",
     "Z†"},
}};

void require_4d_index(int v, const char *what) {
    if (v < 0 || v > 3) {
        throw DomainError(std::string(what) + " must be in [0, 4)");
    }
}

}  // namespace

SchemeSpec SchemeSpec::uniform(int d, int n, int b, int k) {
    SchemeSpec s;
    s.d = d;
    s.n = n;
    s.k = k;
    s.shifts.assign(n > 1 ? static_cast<std::size_t>(n - 1) : 0, b);
    return s;
}

void SchemeSpec::validate() const {
    if (d < 4 || !std::has_single_bit(static_cast<unsigned>(d))) {
        throw DomainError("d must be a power of two >= 4");
    }
    if (n < 2) {
        throw DomainError("n must be at least 2");
    }
    if (shifts.size() != static_cast<std::size_t>(n - 1)) {
        throw DomainError("expected " + std::to_string(n - 1) + " shifts, got " + std::to_string(shifts.size()));
    }
    if (static_cast<long>(n - 1) * bits_per_qudit() > 24) {
        throw DomainError("scheme needs more emitters than a dense state supports");
    }
}

SchemeSpec SchemeSpec::normalized() const {
    SchemeSpec s = *this;
    s.k = mod(k, d);
    for (int &q : s.shifts) {
        q = mod(q, d);
    }
    return s;
}

bool SchemeSpec::has_uniform_shift() const {
    for (int q : shifts) {
        if (mod(q, d) != mod(shifts.front(), d)) {
            return false;
        }
    }
    return true;
}

int SchemeSpec::bits_per_qudit() const {
    return std::countr_zero(static_cast<unsigned>(d));
}

std::vector<std::string> emitter_names(std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
        names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
    }
    return names;
}

std::shared_ptr<const RegisterLayout> scheme_layout(int d, int n) {
    SchemeSpec::uniform(d, n, 0).validate();
    const int h = d / 2;
    std::vector<std::string> paths;
    for (int i = 0; i < h; ++i) {
        paths.push_back(path_name('a', i));
    }
    for (int i = 0; i < h; ++i) {
        paths.push_back(path_name('v', i));
    }
    return make_layout(std::move(paths), emitter_names(static_cast<std::size_t>(emitters_required(d, n))));
}

HybridState ideal_state(const SchemeSpec &spec) {
    return ideal_state(spec, scheme_layout(spec.d, spec.n));
}

HybridState ideal_state(const SchemeSpec &raw, std::shared_ptr<const RegisterLayout> layout) {
    raw.validate();
    const SchemeSpec spec = raw.normalized();
    const QuditEncoding enc(spec.d);
    const int stationary = spec.stationary_count();
    if (layout->n_paths() < static_cast<std::size_t>(enc.photon_paths())) {
        throw LayoutError("layout has fewer paths than the photon encoding needs");
    }
    if (layout->n_emitters() != static_cast<std::size_t>(stationary * enc.bits_per_qudit())) {
        throw LayoutError(
            "layout has " + std::to_string(layout->n_emitters()) + " emitters, target needs " +
            std::to_string(stationary * enc.bits_per_qudit()));
    }
    HybridState out(layout);
    const double amp = 1.0 / std::sqrt(static_cast<double>(spec.d));
    for (int l = 0; l < spec.d; ++l) {
        BasisLabel label = enc.photon_mode(l);
        for (int s = 0; s < stationary; ++s) {
            label.bits |= enc.qudit_bits(s, stationary, l + spec.shifts[s]);
        }
        const double phase = 2.0 * std::numbers::pi * static_cast<double>((l * spec.k) % spec.d) / spec.d;
        out[layout->index(label)] = std::polar(amp, phase);
    }
    return out;
}

HybridState source_state(int d, int n) {
    auto layout = scheme_layout(d, n);
    std::vector<SpinInit> init(layout->n_emitters(), SpinInit::Plus);
    return new_state(layout, PolInit::HV, "a1", init);
}

std::string port_name(int d, int port) {
    static constexpr std::string_view kLetters = "ijst";
    const int h = d / 2;
    const int base = port % h;
    std::string name = h <= static_cast<int>(kLetters.size()) ? "a_" + std::string(1, kLetters[base])
                                                               : "a_" + std::to_string(base + 1);
    if (port >= h) {
        name += "'";
    }
    return name;
}

PortAssignment routing(int d, int b) {
    SchemeSpec::uniform(d, 2, b).validate();
    if (b < 0 || b >= d) {
        throw DomainError("base shift must be in [0, d)");
    }
    PortAssignment out;
    out.d = d;
    out.b = b;
    for (int m = 0; m < d / 2; ++m) {
        int port = (m + b) % d;
        out.ports.push_back(port);
        out.port_names.push_back(port_name(d, port));
    }
    if (d == 4) {
        switch (b) {
            case 1:
                out.inserted_plates = {"H3", "H4", "H5"};
                break;
            case 2:
                out.inserted_plates = {"H6", "H7"};
                break;
            case 3:
                out.inserted_plates = {"H6", "H7"};
                out.removed_plates = {"H2"};
                break;
            default:
                break;
        }
    }
    return out;
}

int flip_weight(int v) {
    return std::popcount(static_cast<unsigned>(v));
}

int emitters_required(int d, int n) {
    return (n - 1) * std::countr_zero(static_cast<unsigned>(d));
}

double quoted_emitter_count(int d, int n) {
    return (n - 1) * (4.0 + d) / 4.0;
}

Circuit generation_circuit(int d, int n, int b) {
    SchemeSpec::uniform(d, n, b).validate();
    const int base = mod(b, d);
    const int h = d / 2;
    const int bits = std::countr_zero(static_cast<unsigned>(d));
    auto layout = scheme_layout(d, n);
    const auto &emitters = layout->emitters();

    Circuit c{layout, {}};
    // Spread the photon from a1 over a1..a_h with equal positive amplitudes.
    for (int step = h / 2; step >= 1; step /= 2) {
        for (int i = 0; i < h; i += 2 * step) {
            c.elements.emplace_back(BeamSplitter{path_name('a', i), path_name('a', i + step)});
        }
    }

    const PortAssignment ports = routing(d, base);
    for (int m = 0; m < h; ++m) {
        c.elements.emplace_back(
            PolarizingBeamSplitter{path_name('a', m), path_name('v', m), path_name('a', m), path_name('v', m)});
    }
    for (int m = 0; m < h; ++m) {
        for (int branch = 0; branch < 2; ++branch) {
            const std::string path = path_name(branch == 0 ? 'a' : 'v', m);
            const int pattern = (ports.ports[m] + branch * h) % d;
            int unions = 0;
            for (int s = 0; s < n - 1; ++s) {
                for (int bit = 0; bit < bits; ++bit) {
                    if (pattern & (1 << (bits - 1 - bit))) {
                        c.elements.emplace_back(EmitterUnion{emitters[s * bits + bit], path});
                        ++unions;
                    }
                }
            }
            if (unions % 2 == 1) {
                c.elements.emplace_back(HalfWavePlate{path});
            }
        }
    }
    for (int m = 0; m < h; ++m) {
        c.elements.emplace_back(
            PolarizingBeamSplitter{path_name('a', m), path_name('v', m), path_name('a', m), path_name('v', m)});
    }
    return c;
}

namespace {

void require_direct_generation(const SchemeSpec &spec) {
    spec.validate();
    if (mod(spec.k, spec.d) != 0) {
        throw DomainError("direct generation produces k = 0 only; apply Z^k afterwards");
    }
    if (!spec.has_uniform_shift()) {
        throw DomainError("direct generation needs equal shifts on every stationary qudit");
    }
}

}  // namespace

HybridState generate_entangled(const SchemeSpec &spec, Complex r) {
    require_direct_generation(spec);
    Circuit c = generation_circuit(spec.d, spec.n, spec.shifts.front());
    return run_circuit(c, r, source_state(spec.d, spec.n));
}

HybridState generate_entangled(const SchemeSpec &spec, const ScatteringParams &params) {
    return generate_entangled(spec, reflection_coefficient(params).r);
}

HybridState generation_oracle(const SchemeSpec &raw, Complex r) {
    require_direct_generation(raw);
    const SchemeSpec spec = raw.normalized();
    const QuditEncoding enc(spec.d);
    const int stationary = spec.stationary_count();
    const int b = spec.shifts.front();
    auto layout = scheme_layout(spec.d, spec.n);
    HybridState out(layout);
    const double amp = 1.0 / std::sqrt(static_cast<double>(spec.d));
    for (int l = 0; l < spec.d; ++l) {
        const int target = (l + b) % spec.d;
        BasisLabel label = enc.photon_mode(l);
        for (int s = 0; s < stationary; ++s) {
            label.bits |= enc.qudit_bits(s, stationary, target);
        }
        out[layout->index(label)] = amp * ipow(-r, stationary * flip_weight(target));
    }
    return out;
}

std::vector<CircuitElement> z_gate_elements(const RegisterLayout &layout, int d, int m) {
    const QuditEncoding enc(d);
    if (m < 0 || m >= d) {
        throw DomainError("Z power must be in [0, d)");
    }
    if (layout.n_paths() < static_cast<std::size_t>(enc.photon_paths())) {
        throw LayoutError("layout has fewer paths than the photon encoding needs");
    }
    std::vector<CircuitElement> out;
    for (int l = 1; l < d; ++l) {
        const int step = (l * m) % d;
        if (step == 0) {
            continue;
        }
        const BasisLabel mode = enc.photon_mode(l);
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(step) / d;
        out.emplace_back(PhaseShift{
            layout.paths()[mode.path],
            mode.pol == Polarization::H ? PolFilter::H : PolFilter::V,
            theta,
        });
    }
    return out;
}

HybridState apply_z_gate(const HybridState &state, int m, int d) {
    HybridState out = state;
    for (const auto &e : z_gate_elements(state.layout(), d, m)) {
        out = apply_element(out, e, Complex{-1.0});
    }
    return out;
}

std::vector<CircuitElement> x_gate_elements(const RegisterLayout &layout, int target_qudit, int m, int parity_shift) {
    require_4d_index(m, "X power");
    if (layout.n_paths() < 2 || layout.n_emitters() % 2 != 0) {
        throw LayoutError("X gate needs the 4D photon encoding and emitter pairs");
    }
    const int n = static_cast<int>(layout.n_emitters() / 2) + 1;
    if (target_qudit < 3 || target_qudit > n) {
        throw DomainError("X gate target must be a stationary qudit index in [3, " + std::to_string(n) + "]");
    }
    const std::string &hi = layout.emitters()[static_cast<std::size_t>(2 * (target_qudit - 2))];
    const std::string &lo = layout.emitters()[static_cast<std::size_t>(2 * (target_qudit - 2) + 1)];
    const bool swap = mod(parity_shift, 2) == 1;
    const std::string &even = layout.paths()[swap ? 1 : 0];
    const std::string &odd = layout.paths()[swap ? 0 : 1];

    std::vector<CircuitElement> out;
    auto flip_low = [&](const std::string &path) {
        out.emplace_back(EmitterUnion{lo, path});
        out.emplace_back(HalfWavePlate{path});
    };
    auto flip_both = [&](const std::string &path) {
        out.emplace_back(EmitterUnion{hi, path});
        out.emplace_back(EmitterUnion{lo, path});
    };
    switch (m) {
        case 1:
            flip_low(even);
            flip_both(odd);
            break;
        case 2:
            for (const std::string *path : {&even, &odd}) {
                out.emplace_back(EmitterUnion{hi, *path});
                out.emplace_back(HalfWavePlate{*path});
            }
            break;
        case 3:
            flip_both(even);
            flip_low(odd);
            break;
        default:
            break;
    }
    return out;
}

HybridState apply_x_gate(const HybridState &state, int target_qudit, int m, Complex r, int parity_shift) {
    HybridState out = state;
    for (const auto &e : x_gate_elements(state.layout(), target_qudit, m, parity_shift)) {
        out = apply_element(out, e, r);
    }
    return out;
}

std::string_view table2_label(int k, int p, int q) {
    require_4d_index(k, "k");
    require_4d_index(p, "p");
    require_4d_index(q, "q");
    return kTable2[static_cast<std::size_t>(k)][static_cast<std::size_t>(4 * p + q)];
}

Table2Operation parse_table2_label(std::string_view label) {
    Table2Operation op;
    op.label = std::string(label);
    std::string_view rest = label;
    auto take_power = [&](int &power) {
        if (rest.starts_with("⁰")) {
            power = 0;
            rest.remove_prefix(std::string_view("⁰").size());
        } else if (rest.starts_with("²")) {
            power = 2;
            rest.remove_prefix(std::string_view("²").size());
        } else if (rest.starts_with("†")) {
            power = 3;
            rest.remove_prefix(std::string_view("†").size());
        } else {
            power = 1;
        }
    };
    if (rest.starts_with("X")) {
        rest.remove_prefix(1);
        take_power(op.x_power);
    }
    if (rest.starts_with("Z")) {
        rest.remove_prefix(1);
        take_power(op.z_power);
    }
    if (!rest.empty() || label.empty()) {
        throw DomainError("malformed operation label '" + std::string(label) + "'");
    }
    return op;
}

Table2Operation table2_operation(int k, int p, int q) {
    return parse_table2_label(table2_label(k, p, q));
}

int table2_rule_x_power(int p, int q) {
    return mod(q - p, 4);
}

Circuit compose_table2_circuit(int k, int p, int q) {
    const Table2Operation op = table2_operation(k, p, q);
    Circuit c = generation_circuit(4, 3, p);
    for (auto &e : x_gate_elements(*c.layout, 3, op.x_power, p)) {
        c.elements.push_back(std::move(e));
    }
    for (auto &e : z_gate_elements(*c.layout, 4, op.z_power)) {
        c.elements.push_back(std::move(e));
    }
    return c;
}

HybridState compose_table2(int k, int p, int q, Complex r) {
    return run_circuit(compose_table2_circuit(k, p, q), r, source_state(4, 3));
}

Eigen::MatrixXcd shift_matrix(int d, int m) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
    for (int l = 0; l < d; ++l) {
        x(mod(l + m, d), l) = 1.0;
    }
    return x;
}

Eigen::MatrixXcd clock_matrix(int d, int m) {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
    for (int l = 0; l < d; ++l) {
        z(l, l) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod(l * m, d)) / d);
    }
    return z;
}

}  // namespace heraldq
