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

#include "heraldq/state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "heraldq/simd/kernels.h"

namespace heraldq {

namespace {

void require_unique(const std::vector<std::string> &names, const char *what) {
    std::unordered_set<std::string> seen;
    for (const auto &n : names) {
        if (n.empty()) {
            throw LayoutError(std::string("empty ") + what + " name");
        }
        if (!seen.insert(n).second) {
            throw LayoutError(std::string("duplicate ") + what + " '" + n + "'");
        }
    }
}

}  // namespace

RegisterLayout::RegisterLayout(std::vector<std::string> paths, std::vector<std::string> emitters)
    : paths_(std::move(paths)), emitters_(std::move(emitters)) {
    if (paths_.empty()) {
        throw LayoutError("layout needs at least one path");
    }
    if (emitters_.size() > 24) {
        throw LayoutError("too many emitters for a dense state vector");
    }
    require_unique(paths_, "path");
    require_unique(emitters_, "emitter");
}

std::size_t RegisterLayout::path_index(std::string_view name) const {
    auto it = std::find(paths_.begin(), paths_.end(), name);
    if (it == paths_.end()) {
        throw LayoutError("unknown path '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - paths_.begin());
}

std::size_t RegisterLayout::emitter_index(std::string_view name) const {
    auto it = std::find(emitters_.begin(), emitters_.end(), name);
    if (it == emitters_.end()) {
        throw LayoutError("unknown emitter '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - emitters_.begin());
}

bool RegisterLayout::has_path(std::string_view name) const {
    return std::find(paths_.begin(), paths_.end(), name) != paths_.end();
}

bool RegisterLayout::has_emitter(std::string_view name) const {
    return std::find(emitters_.begin(), emitters_.end(), name) != emitters_.end();
}

BasisLabel RegisterLayout::label(std::size_t index) const {
    std::size_t block = index / block_size();
    return BasisLabel{
        static_cast<Polarization>(block / n_paths()),
        block % n_paths(),
        static_cast<std::uint64_t>(index % block_size()),
    };
}

std::shared_ptr<const RegisterLayout> make_layout(std::vector<std::string> paths, std::vector<std::string> emitters) {
    return std::make_shared<const RegisterLayout>(std::move(paths), std::move(emitters));
}

HybridState::HybridState(std::shared_ptr<const RegisterLayout> layout)
    : layout_(std::move(layout)), amplitudes_(layout_->dimension()) {
}

HybridState::HybridState(std::shared_ptr<const RegisterLayout> layout, std::vector<Complex> amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != layout_->dimension()) {
        throw LayoutError("amplitude vector length does not match layout dimension");
    }
}

double HybridState::norm_squared() const {
    return simd::active_kernels().norm2(amplitudes_.data(), amplitudes_.size());
}

HybridState HybridState::scaled(Complex factor) const {
    HybridState out = *this;
    simd::active_kernels().scale(out.amplitudes_.data(), out.amplitudes_.size(), factor);
    return out;
}

HybridState HybridState::operator+(const HybridState &other) const {
    require_same_layout(*this, other);
    HybridState out = *this;
    for (std::size_t i = 0; i < out.amplitudes_.size(); ++i) {
        out.amplitudes_[i] += other.amplitudes_[i];
    }
    return out;
}

double HybridState::max_abs_difference(const HybridState &other) const {
    require_same_layout(*this, other);
    double worst = 0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        worst = std::max(worst, std::abs(amplitudes_[i] - other.amplitudes_[i]));
    }
    return worst;
}

void require_same_layout(const HybridState &a, const HybridState &b) {
    if (a.layout_ptr() != b.layout_ptr() && !(a.layout() == b.layout())) {
        throw LayoutError("states have different register layouts");
    }
}

HybridState new_state(
    std::shared_ptr<const RegisterLayout> layout,
    PolInit pol,
    std::string_view path,
    std::span<const SpinInit> emitter_init) {
    const std::size_t p = layout->path_index(path);
    if (emitter_init.size() != layout->n_emitters()) {
        throw LayoutError(
            "expected " + std::to_string(layout->n_emitters()) + " emitter initializations, got " +
            std::to_string(emitter_init.size()));
    }

    // Emitter product state in the +/- basis, built one factor at a time.
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Complex> spins{1.0};
    for (SpinInit init : emitter_init) {
        Complex plus;
        Complex minus;
        switch (init) {
            case SpinInit::Plus:
                plus = 1;
                break;
            case SpinInit::Minus:
                minus = 1;
                break;
            case SpinInit::GPlus:
                plus = s;
                minus = -s;
                break;
            case SpinInit::GMinus:
                plus = s;
                minus = s;
                break;
        }
        std::vector<Complex> next(spins.size() * 2);
        for (std::size_t i = 0; i < spins.size(); ++i) {
            next[2 * i] = spins[i] * plus;
            next[2 * i + 1] = spins[i] * minus;
        }
        spins = std::move(next);
    }

    Complex h;
    Complex v;
    switch (pol) {
        case PolInit::H:
            h = 1;
            break;
        case PolInit::V:
            v = 1;
            break;
        case PolInit::HV:
            h = s;
            v = s;
            break;
    }

    HybridState out(std::move(layout));
    auto hb = out.block(Polarization::H, p);
    auto vb = out.block(Polarization::V, p);
    for (std::size_t b = 0; b < spins.size(); ++b) {
        hb[b] = h * spins[b];
        vb[b] = v * spins[b];
    }
    return out;
}

Complex inner_product(const HybridState &s1, const HybridState &s2) {
    require_same_layout(s1, s2);
    return simd::active_kernels().cdot(s1.amplitudes().data(), s2.amplitudes().data(), s1.size());
}

HybridState map_component(
    const HybridState &state,
    const std::function<bool(const BasisLabel &)> &predicate,
    Complex factor,
    ComponentFlips flips) {
    const RegisterLayout &layout = state.layout();
    if (flips.emitter_bits >= layout.block_size()) {
        throw LayoutError("emitter flip mask references emitters outside the layout");
    }
    HybridState out(state.layout_ptr());
    std::vector<std::pair<std::size_t, Complex>> moved;
    for (std::size_t i = 0; i < state.size(); ++i) {
        BasisLabel label = layout.label(i);
        if (!predicate(label)) {
            out[i] += state[i];
            continue;
        }
        if (flips.polarization) {
            label.pol = label.pol == Polarization::H ? Polarization::V : Polarization::H;
        }
        label.bits ^= flips.emitter_bits;
        moved.emplace_back(layout.index(label), state[i] * factor);
    }
    for (const auto &[index, value] : moved) {
        out[index] += value;
    }
    return out;
}

QuditEncoding::QuditEncoding(int d) : d_(d), bits_(0) {
    if (d < 4 || !std::has_single_bit(static_cast<unsigned>(d))) {
        throw DomainError("d must be a power of two >= 4");
    }
    bits_ = std::countr_zero(static_cast<unsigned>(d));
}

int QuditEncoding::photon_level(Polarization pol, std::size_t path) const {
    if (path >= static_cast<std::size_t>(photon_paths())) {
        throw LayoutError("path index outside the photon encoding");
    }
    return static_cast<int>(pol) * photon_paths() + static_cast<int>(path);
}

BasisLabel QuditEncoding::photon_mode(int level) const {
    if (level < 0 || level >= d_) {
        throw DomainError("photon level out of range");
    }
    return BasisLabel{
        level >= photon_paths() ? Polarization::V : Polarization::H,
        static_cast<std::size_t>(level % photon_paths()),
        0,
    };
}

std::uint64_t QuditEncoding::qudit_bits(int which, int n_stationary, int level) const {
    if (which < 0 || which >= n_stationary) {
        throw DomainError("stationary qudit index out of range");
    }
    const int shift = (n_stationary - 1 - which) * bits_;
    return static_cast<std::uint64_t>(level & (d_ - 1)) << shift;
}

int QuditEncoding::qudit_level(std::uint64_t bits, int which, int n_stationary) const {
    if (which < 0 || which >= n_stationary) {
        throw DomainError("stationary qudit index out of range");
    }
    const int shift = (n_stationary - 1 - which) * bits_;
    return static_cast<int>((bits >> shift) & static_cast<std::uint64_t>(d_ - 1));
}

nlohmann::json dump_state(const HybridState &state) {
    const RegisterLayout &layout = state.layout();
    nlohmann::json records = nlohmann::json::array();
    for (std::size_t i = 0; i < state.size(); ++i) {
        Complex a = state[i];
        if (std::abs(a) < 1e-14) {
            continue;
        }
        BasisLabel label = layout.label(i);
        std::string spins;
        for (std::size_t e = 0; e < layout.n_emitters(); ++e) {
            spins += (label.bits & layout.emitter_mask(e)) ? '-' : '+';
        }
        records.push_back({
            {"pol", label.pol == Polarization::H ? "H" : "V"},
            {"path", layout.paths()[label.path]},
            {"emitters", spins},
            {"re", a.real()},
            {"im", a.imag()},
        });
    }
    return records;
}

}  // namespace heraldq
