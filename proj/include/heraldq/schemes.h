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

#ifndef HERALDQ_SCHEMES_H
#define HERALDQ_SCHEMES_H

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "heraldq/elements.h"
#include "heraldq/scattering.h"
#include "heraldq/state.h"

namespace heraldq {

/// Target family (1/sqrt d) sum_l e^{2 pi i l k / d} |l>|l+q_2>...|l+q_n>.
/// `shifts` holds q_2..q_n, one entry per stationary qudit.
struct SchemeSpec {
    int d = 4;
    int n = 2;
    int k = 0;
    std::vector<int> shifts;

    /// All stationary qudits shifted by the same base b.
    static SchemeSpec uniform(int d, int n, int b, int k = 0);

    /// Throws DomainError ("d must be a power of two >= 4", n < 2, wrong
    /// number of shifts).
    void validate() const;

    /// k and shifts reduced mod d.
    SchemeSpec normalized() const;

    bool has_uniform_shift() const;

    int bits_per_qudit() const;
    int stationary_count() const {
        return n - 1;
    }
};

std::vector<std::string> emitter_names(std::size_t count);

/// Paths a1..a_{d/2} (photon encoding) followed by the V branches v1..v_{d/2}
/// used while the generation circuit splits polarizations; (n-1) log2 d
/// emitters named a, b, c, ...
std::shared_ptr<const RegisterLayout> scheme_layout(int d, int n);

HybridState ideal_state(const SchemeSpec &spec);

/// Embeds the ideal state into `layout`: the first d/2 paths carry the photon
/// levels and the emitters are grouped log2 d per stationary qudit in order.
HybridState ideal_state(const SchemeSpec &spec, std::shared_ptr<const RegisterLayout> layout);

/// (|H> + |V>)/sqrt2 on a1 with every emitter in |+>.
HybridState source_state(int d, int n);

/// Which physical input port every logical photon path is wired to.
struct PortAssignment {
    int d = 4;
    int b = 0;
    /// ports[m] is the port index of path a_{m+1}; ports >= d/2 are the primed ones.
    std::vector<int> ports;
    std::vector<std::string> port_names;
    /// Auxiliary 45-degree plates added to / removed from the base layout (d = 4 only).
    std::vector<std::string> inserted_plates;
    std::vector<std::string> removed_plates;
};

std::string port_name(int d, int port);

/// Cyclic port wiring: a_{m+1} -> port (m + b) mod d over
/// (a_i, a_j, [a_s, a_t, ...], a_i', a_j', ...).
PortAssignment routing(int d, int b);

/// Element-level generation of |phi_{0 b ... b}>: beam-splitter tree from a1,
/// PBS split of every path into H/V branches, one union per set bit of the
/// routed flip pattern and stationary qudit, HWP to undo an odd number of
/// polarization flips, PBS recombination.
Circuit generation_circuit(int d, int n, int b);

/// Runs generation_circuit from source_state. Requires k == 0 and uniform shifts.
HybridState generate_entangled(const SchemeSpec &spec, Complex r);
HybridState generate_entangled(const SchemeSpec &spec, const ScatteringParams &params);

/// Closed form of the generated state: amplitude (1/sqrt d)(-r)^((n-1) w(l+b))
/// on |l>|l+b>...|l+b>, w the Hamming weight, built directly from the encoding.
HybridState generation_oracle(const SchemeSpec &spec, Complex r);

/// Hamming weight of the log2 d bit pattern of level v.
int flip_weight(int v);

/// Phase elements realizing Z^m|l> = e^{2 pi i l m / d}|l> on the photon, one
/// per level with a nonzero phase.
std::vector<CircuitElement> z_gate_elements(const RegisterLayout &layout, int d, int m);
HybridState apply_z_gate(const HybridState &state, int m, int d = 4);

/// Union/HWP elements of the 4D X^m gate on stationary qudit `target_qudit`
/// (1-based over all qudits, so >= 3). The photon path selects which emitters
/// of the pair are flipped:
///   m=1: even path flips the low emitter, odd path flips both
///   m=2: both paths flip the high emitter
///   m=3: even path flips both, odd path flips the low emitter
/// "Even" is a1 when the target's shift relative to the photon is even and a2
/// when it is odd, so that the path tracks the parity of the target level.
std::vector<CircuitElement> x_gate_elements(const RegisterLayout &layout, int target_qudit, int m, int parity_shift);
HybridState apply_x_gate(const HybridState &state, int target_qudit, int m, Complex r, int parity_shift = 0);

struct Table2Operation {
    int x_power = 0;
    int z_power = 0;
    std::string label;
};

/// Stored entry for |phi_kpq> (operation applied to the generated |phi_0pp>).
std::string_view table2_label(int k, int p, int q);
Table2Operation table2_operation(int k, int p, int q);

/// Parses labels like "Z⁰", "X", "X²Z", "X†Z†".
Table2Operation parse_table2_label(std::string_view label);

/// (q - p) mod 4.
int table2_rule_x_power(int p, int q);

Circuit compose_table2_circuit(int k, int p, int q);

/// Generated |phi_0pp>, then X^((q-p) mod 4) on qudit 3, then Z^k on qudit 1.
HybridState compose_table2(int k, int p, int q, Complex r);

/// Emitters consumed by generate_entangled: (n-1) log2 d.
int emitters_required(int d, int n);

/// The closed-form count (n-1)(4+d)/4; equals emitters_required only for d in {4, 8}.
double quoted_emitter_count(int d, int n);

/// Generalized shift X^m|l> = |l+m mod d> and clock Z^m|l> = e^{2 pi i l m/d}|l>.
Eigen::MatrixXcd shift_matrix(int d, int m);
Eigen::MatrixXcd clock_matrix(int d, int m);

}  // namespace heraldq

#endif
