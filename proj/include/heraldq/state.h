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

#ifndef HERALDQ_STATE_H
#define HERALDQ_STATE_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heraldq/errors.h"
#include "json.hpp"

namespace heraldq {

enum class Polarization : std::uint8_t { H = 0, V = 1 };

/// Photon polarization at preparation time. HV is (|H> + |V>)/sqrt2.
enum class PolInit : std::uint8_t { H, V, HV };

/// Emitter preparation. The storage basis is |+>/|->; the g-basis states are
/// |g+> = (|+> - |->)/sqrt2 and |g-> = (|+> + |->)/sqrt2, inverting
/// |+-> = (|g-> +- |g+>)/sqrt2.
enum class SpinInit : std::uint8_t { Plus, Minus, GPlus, GMinus };

/// One basis vector: polarization, path index and the emitter bitstring
/// (bit set = |->, emitter 0 is the most significant bit).
struct BasisLabel {
    Polarization pol;
    std::size_t path;
    std::uint64_t bits;

    bool operator==(const BasisLabel &) const = default;
};

/// Names and ordering of the photon paths and emitters.
///
/// Amplitudes are stored polarization-major, then path, then emitter
/// bitstring, so the index of (pol, path, bits) is
///     (pol * n_paths + path) * 2^n_emitters + bits
/// and every (pol, path) pair owns a contiguous block of 2^n_emitters
/// amplitudes.
class RegisterLayout {
   public:
    RegisterLayout(std::vector<std::string> paths, std::vector<std::string> emitters);

    std::size_t n_paths() const {
        return paths_.size();
    }
    std::size_t n_emitters() const {
        return emitters_.size();
    }
    std::size_t block_size() const {
        return std::size_t{1} << emitters_.size();
    }
    std::size_t dimension() const {
        return 2 * n_paths() * block_size();
    }

    const std::vector<std::string> &paths() const {
        return paths_;
    }
    const std::vector<std::string> &emitters() const {
        return emitters_;
    }

    /// Throws LayoutError for unknown names.
    std::size_t path_index(std::string_view name) const;
    std::size_t emitter_index(std::string_view name) const;
    bool has_path(std::string_view name) const;
    bool has_emitter(std::string_view name) const;

    /// Bit of emitter e inside the bitstring.
    std::uint64_t emitter_mask(std::size_t e) const {
        return std::uint64_t{1} << (emitters_.size() - 1 - e);
    }

    std::size_t block_offset(Polarization pol, std::size_t path) const {
        return (static_cast<std::size_t>(pol) * n_paths() + path) * block_size();
    }
    std::size_t index(const BasisLabel &label) const {
        return block_offset(label.pol, label.path) + static_cast<std::size_t>(label.bits);
    }
    BasisLabel label(std::size_t index) const;

    bool operator==(const RegisterLayout &other) const {
        return paths_ == other.paths_ && emitters_ == other.emitters_;
    }

   private:
    std::vector<std::string> paths_;
    std::vector<std::string> emitters_;
};

/// Dense amplitude vector over a RegisterLayout. The norm may be below one
/// after heralded unions drop their failure branch.
class HybridState {
   public:
    /// All-zero vector.
    explicit HybridState(std::shared_ptr<const RegisterLayout> layout);
    HybridState(std::shared_ptr<const RegisterLayout> layout, std::vector<Complex> amplitudes);

    const RegisterLayout &layout() const {
        return *layout_;
    }
    const std::shared_ptr<const RegisterLayout> &layout_ptr() const {
        return layout_;
    }

    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    std::span<Complex> amplitudes() {
        return amplitudes_;
    }
    std::size_t size() const {
        return amplitudes_.size();
    }

    Complex operator[](std::size_t i) const {
        return amplitudes_[i];
    }
    Complex &operator[](std::size_t i) {
        return amplitudes_[i];
    }
    Complex amplitude(const BasisLabel &label) const {
        return amplitudes_[layout_->index(label)];
    }

    std::span<const Complex> block(Polarization pol, std::size_t path) const {
        return std::span<const Complex>(amplitudes_).subspan(layout_->block_offset(pol, path), layout_->block_size());
    }
    std::span<Complex> block(Polarization pol, std::size_t path) {
        return std::span<Complex>(amplitudes_).subspan(layout_->block_offset(pol, path), layout_->block_size());
    }

    double norm_squared() const;

    HybridState scaled(Complex factor) const;
    HybridState operator+(const HybridState &other) const;

    /// Max |a_i - b_i|; LayoutError on mismatch.
    double max_abs_difference(const HybridState &other) const;

   private:
    std::shared_ptr<const RegisterLayout> layout_;
    std::vector<Complex> amplitudes_;
};

std::shared_ptr<const RegisterLayout> make_layout(std::vector<std::string> paths, std::vector<std::string> emitters);

void require_same_layout(const HybridState &a, const HybridState &b);

/// Product state |pol>|path>|e_0>|e_1>... with unit norm.
HybridState new_state(
    std::shared_ptr<const RegisterLayout> layout,
    PolInit pol,
    std::string_view path,
    std::span<const SpinInit> emitter_init);

/// <s1|s2>, conjugate-linear in s1.
Complex inner_product(const HybridState &s1, const HybridState &s2);

struct ComponentFlips {
    bool polarization = false;
    std::uint64_t emitter_bits = 0;
};

/// Generic linear componentwise map. Components whose label satisfies
/// `predicate` are removed from their slot, multiplied by `factor` and added
/// to the slot reached by applying `flips`; all other components are kept.
HybridState map_component(
    const HybridState &state,
    const std::function<bool(const BasisLabel &)> &predicate,
    Complex factor,
    ComponentFlips flips = {});

/// Level encoding of a d-dimensional qudit register.
///
/// The photon carries level pol * (d/2) + path for the first d/2 declared
/// paths. Each stationary qudit owns log2(d) consecutive emitters; its level's
/// binary digits (first emitter most significant) select |+> for 0 and |-> for 1.
class QuditEncoding {
   public:
    /// d must be a power of two >= 4.
    explicit QuditEncoding(int d);

    int dimension() const {
        return d_;
    }
    int photon_paths() const {
        return d_ / 2;
    }
    int bits_per_qudit() const {
        return bits_;
    }

    int photon_level(Polarization pol, std::size_t path) const;
    BasisLabel photon_mode(int level) const;

    /// Emitter bitstring of a register with `n_stationary` qudits whose
    /// stationary qudit `which` (0-based) holds `level`; other qudits are 0.
    std::uint64_t qudit_bits(int which, int n_stationary, int level) const;
    int qudit_level(std::uint64_t bits, int which, int n_stationary) const;

   private:
    int d_;
    int bits_;
};

/// Array of {pol, path, emitters, re, im} records in basis order, skipping
/// amplitudes with magnitude below 1e-14.
nlohmann::json dump_state(const HybridState &state);

}  // namespace heraldq

#endif
