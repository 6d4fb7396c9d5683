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

#include "heraldq/sweep.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "heraldq/metrics.h"
#include "heraldq/simd/kernels.h"
#include "json.hpp"

namespace heraldq {

SweepTarget SweepTarget::generate(int d, int n, int b, int k) {
    SweepTarget t;
    t.kind = Kind::Generate;
    t.spec = SchemeSpec::uniform(d, n, b, k);
    return t;
}

SweepTarget SweepTarget::compose(int k, int p, int q) {
    SweepTarget t;
    t.kind = Kind::Compose;
    t.spec.d = 4;
    t.spec.n = 3;
    t.spec.k = k;
    t.spec.shifts = {p, q};
    return t;
}

SweepTarget SweepTarget::gate(int m) {
    SweepTarget t;
    t.kind = Kind::Gate;
    t.spec = SchemeSpec::uniform(4, 3, 0);
    t.gate_power = m;
    return t;
}

std::string SweepTarget::id() const {
    const SchemeSpec s = spec.normalized();
    switch (kind) {
        case Kind::Generate:
            return "gen-d" + std::to_string(s.d) + "-n" + std::to_string(s.n) + "-b" +
                   std::to_string(s.shifts.empty() ? 0 : s.shifts[0]) + "-k" + std::to_string(s.k);
        case Kind::Compose:
            return "compose-k" + std::to_string(s.k) + "-p" + std::to_string(s.shifts[0]) + "-q" +
                   std::to_string(s.shifts[1]);
        case Kind::Gate:
            break;
    }
    return "gate-x" + std::to_string(gate_power);
}

SweepTarget SweepTarget::parse(std::string_view id) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : id) {
        if (c == '-') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    auto bad = [&]() { return DomainError("unknown scheme id '" + std::string(id) + "'"); };
    auto field = [&](std::size_t i, char key) {
        const std::string &p = parts[i];
        if (p.size() < 2 || p[0] != key) {
            throw bad();
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(p.data() + 1, p.data() + p.size(), value);
        if (ec != std::errc() || ptr != p.data() + p.size()) {
            throw bad();
        }
        return value;
    };

    SweepTarget t;
    if (parts[0] == "gen" && (parts.size() == 4 || parts.size() == 5)) {
        const int k = parts.size() == 5 ? field(4, 'k') : 0;
        t = generate(field(1, 'd'), field(2, 'n'), field(3, 'b'), k);
    } else if (parts[0] == "compose" && parts.size() == 4) {
        t = compose(field(1, 'k'), field(2, 'p'), field(3, 'q'));
    } else if (parts[0] == "gate" && parts.size() == 2) {
        t = gate(field(1, 'x'));
    } else {
        throw bad();
    }
    t.validate();
    return t;
}

SchemeSpec SweepTarget::ideal_spec() const {
    if (kind == Kind::Gate) {
        SchemeSpec s = SchemeSpec::uniform(4, 3, 0);
        s.shifts = {0, gate_power};
        return s;
    }
    return spec.normalized();
}

void SweepTarget::validate() const {
    spec.validate();
    switch (kind) {
        case Kind::Generate:
            if (!spec.has_uniform_shift()) {
                throw DomainError("generate target needs equal shifts");
            }
            break;
        case Kind::Compose:
            table2_label(spec.k, spec.shifts[0], spec.shifts[1]);
            break;
        case Kind::Gate:
            if (gate_power < 0 || gate_power > 3) {
                throw DomainError("X power must be in [0, 4)");
            }
            break;
    }
}

HybridState SweepTarget::realize(Complex r) const {
    validate();
    switch (kind) {
        case Kind::Generate: {
            SchemeSpec base = spec.normalized();
            const int k = base.k;
            base.k = 0;
            HybridState s = generate_entangled(base, r);
            return k == 0 ? s : apply_z_gate(s, k, base.d);
        }
        case Kind::Compose:
            return compose_table2(spec.k, spec.shifts[0], spec.shifts[1], r);
        case Kind::Gate:
            break;
    }
    return apply_x_gate(ideal_state(SchemeSpec::uniform(4, 3, 0)), 3, gate_power, r, 0);
}

Circuit SweepTarget::circuit() const {
    validate();
    switch (kind) {
        case Kind::Generate: {
            const SchemeSpec s = spec.normalized();
            Circuit c = generation_circuit(s.d, s.n, s.shifts.front());
            for (auto &e : z_gate_elements(*c.layout, s.d, s.k)) {
                c.elements.push_back(std::move(e));
            }
            return c;
        }
        case Kind::Compose:
            return compose_table2_circuit(spec.k, spec.shifts[0], spec.shifts[1]);
        case Kind::Gate:
            break;
    }
    throw DomainError("gate targets act on an ideal input and have no source circuit");
}

namespace {

void require_axis(const std::vector<double> &axis, const char *name) {
    if (axis.empty()) {
        throw DomainError(std::string(name) + " axis is empty");
    }
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (!std::isfinite(axis[i])) {
            throw DomainError(std::string(name) + " axis has a non-finite value");
        }
        if (i > 0 && !(axis[i] > axis[i - 1])) {
            throw DomainError(std::string(name) + " axis must be strictly increasing");
        }
    }
}

std::string format_g9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string join_shifts(const std::vector<int> &q) {
    std::string out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        out += (i ? ";" : "") + std::to_string(q[i]);
    }
    return out;
}

}  // namespace

void SweepGrid::validate() const {
    require_axis(purcell, "purcell");
    require_axis(detuning, "detuning");
    if (purcell.front() <= 0) {
        throw DomainError("purcell values must be positive");
    }
    target.validate();
}

SweepGrid SweepGrid::defaults(SweepTarget target) {
    return SweepGrid{log_space(1.0, 100.0, 40), lin_space(0.0, 0.2, 41), std::move(target)};
}

std::vector<double> log_space(double lo, double hi, std::size_t count) {
    if (count == 0 || lo <= 0 || hi <= 0) {
        throw DomainError("log_space needs a positive range and count");
    }
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<double> lin_space(double lo, double hi, std::size_t count) {
    if (count == 0) {
        throw DomainError("lin_space needs a positive count");
    }
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    out.back() = hi;
    return out;
}

PointMetrics evaluate_point(const SweepTarget &target, Complex r) {
    const HybridState real = target.realize(r);
    const HybridState ideal = ideal_state(target.ideal_spec(), real.layout_ptr());
    return {fidelity(real, ideal), efficiency(real, ideal), heralded_failure_probability(real)};
}

std::vector<SweepRow> run_sweep(const SweepGrid &grid, unsigned threads) {
    grid.validate();
    const std::size_t np = grid.purcell.size();
    const std::size_t nd = grid.detuning.size();
    const std::size_t total = np * nd;

    std::vector<double> purcell(total);
    std::vector<double> detuning(total);
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < nd; ++j) {
            purcell[i * nd + j] = grid.purcell[i];
            detuning[i * nd + j] = grid.detuning[j];
        }
    }
    std::vector<double> r_re(total);
    std::vector<double> r_im(total);
    simd::active_kernels().reflection_batch(purcell.data(), detuning.data(), r_re.data(), r_im.data(), total);

    const SchemeSpec ideal = grid.target.ideal_spec();
    const std::string scheme = grid.target.id();
    std::vector<SweepRow> rows(total);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            PointMetrics m = evaluate_point(grid.target, Complex(r_re[i], r_im[i]));
            SweepRow &row = rows[i];
            row.scheme = scheme;
            row.d = ideal.d;
            row.n = ideal.n;
            row.k = ideal.k;
            row.q = ideal.shifts;
            row.purcell = purcell[i];
            row.detuning = detuning[i];
            row.fidelity = m.fidelity;
            row.efficiency = m.efficiency;
            row.herald_failure = m.herald_failure;
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    if (threads <= 1) {
        work(0, total);
        return rows;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t begin = t * chunk;
        std::size_t end = std::min(total, begin + chunk);
        if (begin < end) {
            pool.emplace_back(work, begin, end);
        }
    }
    for (auto &th : pool) {
        th.join();
    }
    return rows;
}

void write_csv(const std::vector<SweepRow> &rows, std::ostream &out) {
    out << kSweepCsvHeader << '\n';
    for (const auto &r : rows) {
        out << r.scheme << ',' << r.d << ',' << r.n << ',' << r.k << ',' << join_shifts(r.q) << ','
            << format_g9(r.purcell) << ',' << format_g9(r.detuning) << ',' << format_g9(r.fidelity) << ','
            << format_g9(r.efficiency) << ',' << format_g9(r.herald_failure) << '\n';
    }
}

void write_json(const std::vector<SweepRow> &rows, std::ostream &out) {
    // Numbers go through the same 9-digit formatting as the CSV.
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        nlohmann::json q = r.q;
        out << (i ? ",\n " : "\n ") << "{\"scheme\":" << nlohmann::json(r.scheme).dump() << ",\"d\":" << r.d
            << ",\"n\":" << r.n << ",\"k\":" << r.k << ",\"q\":" << q.dump()
            << ",\"purcell\":" << format_g9(r.purcell) << ",\"detuning\":" << format_g9(r.detuning)
            << ",\"fidelity\":" << format_g9(r.fidelity) << ",\"efficiency\":" << format_g9(r.efficiency)
            << ",\"herald_failure\":" << format_g9(r.herald_failure) << "}";
    }
    out << (rows.empty() ? "]\n" : "\n]\n");
}

void emit(const std::vector<SweepRow> &rows, SweepFormat format, const std::string &destination) {
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + destination + "'");
    }
    if (format == SweepFormat::Csv) {
        write_csv(rows, out);
    } else {
        write_json(rows, out);
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing '" + destination + "'");
    }
}

std::vector<SweepRow> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kSweepCsvHeader) {
        throw std::runtime_error("missing sweep CSV header");
    }
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (f.size() != 10) {
            throw std::runtime_error("sweep CSV row must have 10 fields");
        }
        SweepRow r;
        r.scheme = f[0];
        r.d = std::stoi(f[1]);
        r.n = std::stoi(f[2]);
        r.k = std::stoi(f[3]);
        std::stringstream qs(f[4]);
        while (std::getline(qs, cell, ';')) {
            r.q.push_back(std::stoi(cell));
        }
        r.purcell = std::stod(f[5]);
        r.detuning = std::stod(f[6]);
        r.fidelity = std::stod(f[7]);
        r.efficiency = std::stod(f[8]);
        r.herald_failure = std::stod(f[9]);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace heraldq
