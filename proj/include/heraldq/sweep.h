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

#ifndef HERALDQ_SWEEP_H
#define HERALDQ_SWEEP_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "heraldq/schemes.h"
#include "heraldq/state.h"

namespace heraldq {

/// What a sweep evaluates at each grid point.
///   Generate: direct generation (+ Z^k when k != 0) against |phi_{k b..b}>.
///   Compose:  stored composition (d=4, n=3) against |phi_{k p q}>.
///   Gate:     X^m applied to the ideal |phi_000> against |phi_{0 0 m}>.
struct SweepTarget {
    enum class Kind { Generate, Compose, Gate };

    Kind kind = Kind::Generate;
    SchemeSpec spec = SchemeSpec::uniform(4, 2, 0);
    int gate_power = 0;

    static SweepTarget generate(int d, int n, int b, int k = 0);
    static SweepTarget compose(int k, int p, int q);
    static SweepTarget gate(int m);

    /// Scheme id: "gen-d<d>-n<n>-b<b>-k<k>", "compose-k<k>-p<p>-q<q>" or "gate-x<m>".
    std::string id() const;

    /// Inverse of id(); DomainError on malformed ids.
    static SweepTarget parse(std::string_view id);

    /// The ideal state the target is scored against.
    SchemeSpec ideal_spec() const;

    void validate() const;

    /// Realistic heralded state at reflection coefficient r.
    HybridState realize(Complex r) const;

    /// Element list realize() runs from source_state(d, n). Gate targets start
    /// from an ideal state instead and throw DomainError.
    Circuit circuit() const;
};

struct SweepGrid {
    std::vector<double> purcell;
    std::vector<double> detuning;
    SweepTarget target;

    /// Both axes non-empty, strictly increasing, purcell > 0, all finite.
    void validate() const;

    /// 40 log-spaced purcell values on [1, 100] and 41 detunings on [0, 0.2].
    static SweepGrid defaults(SweepTarget target);
};

struct SweepRow {
    std::string scheme;
    int d = 4;
    int n = 2;
    int k = 0;
    std::vector<int> q;
    double purcell = 0;
    double detuning = 0;
    double fidelity = 0;
    double efficiency = 0;
    double herald_failure = 0;
};

struct PointMetrics {
    double fidelity;
    double efficiency;
    double herald_failure;
};

PointMetrics evaluate_point(const SweepTarget &target, Complex r);

/// One row per grid point, purcell-major. `threads == 0` picks the hardware
/// concurrency; the output does not depend on the thread count.
std::vector<SweepRow> run_sweep(const SweepGrid &grid, unsigned threads = 0);

std::vector<double> log_space(double lo, double hi, std::size_t count);
std::vector<double> lin_space(double lo, double hi, std::size_t count);

enum class SweepFormat { Csv, Json };

inline constexpr std::string_view kSweepCsvHeader =
    "scheme,d,n,k,q,purcell,detuning,fidelity,efficiency,herald_failure";

void write_csv(const std::vector<SweepRow> &rows, std::ostream &out);
void write_json(const std::vector<SweepRow> &rows, std::ostream &out);

/// Writes to `destination`; std::runtime_error if it cannot be opened.
void emit(const std::vector<SweepRow> &rows, SweepFormat format, const std::string &destination);

std::vector<SweepRow> read_csv(std::istream &in);

}  // namespace heraldq

#endif
