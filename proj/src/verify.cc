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

#include "heraldq/verify.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "heraldq/elements.h"
#include "heraldq/metrics.h"
#include "heraldq/scattering.h"
#include "heraldq/schemes.h"
#include "heraldq/sweep.h"

namespace heraldq {

namespace {

constexpr std::array<CorpusEntry, 14> kCorpus = {{
    {"fig2_q0.net", "gen-d4-n2-b0-k0", "4D two-qudit generation of |phi_00>"},
    {"fig2_q1.net", "gen-d4-n2-b1-k0", "4D two-qudit generation of |phi_01>"},
    {"fig2_q2.net", "gen-d4-n2-b2-k0", "4D two-qudit generation of |phi_02>"},
    {"fig2_q3.net", "gen-d4-n2-b3-k0", "4D two-qudit generation of |phi_03>"},
    {"fig3_z.net", "gen-d4-n2-b0-k1", "Z on the photon after generating |phi_00>"},
    {"fig3_z2.net", "gen-d4-n2-b0-k2", "Z^2 on the photon after generating |phi_00>"},
    {"fig3_zdag.net", "gen-d4-n2-b0-k3", "Z^dagger on the photon after generating |phi_00>"},
    {"fig4_b0.net", "gen-d4-n3-b0-k0", "4D three-qudit generation of |phi_000>"},
    {"fig5a_x.net", "compose-k0-p0-q1", "X on the third qudit of |phi_000>"},
    {"fig5a_xdag.net", "compose-k0-p0-q3", "X^dagger on the third qudit of |phi_000>"},
    {"fig5b_x2.net", "compose-k0-p0-q2", "X^2 on the third qudit of |phi_000>"},
    {"fig6_n4.net", "gen-d4-n4-b0-k0", "4D four-qudit generation"},
    {"fig6_n5.net", "gen-d4-n5-b0-k0", "4D five-qudit generation"},
    {"fig7b.net", "gen-d8-n2-b0-k0", "8D two-qudit generation of |phi_00>"},
}};

constexpr double kExact = 1e-12;
constexpr double kEntropyTol = 1e-9;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct SchemeCase {
    int d;
    int n;
    int b;
};

std::vector<SchemeCase> supported_schemes() {
    std::vector<SchemeCase> out;
    for (int n = 2; n <= 5; ++n) {
        for (int b = 0; b < 4; ++b) {
            out.push_back({4, n, b});
        }
    }
    for (int b = 0; b < 8; ++b) {
        out.push_back({8, 2, b});
    }
    return out;
}

std::string scheme_name(const SchemeCase &s) {
    return "d=" + std::to_string(s.d) + " n=" + std::to_string(s.n) + " b=" + std::to_string(s.b);
}

double matrix_deviation(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd &m, int k) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) {
        out = out * m;
    }
    return out;
}

HybridState random_state(const std::shared_ptr<const RegisterLayout> &layout, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> amps(layout->dimension());
    for (auto &a : amps) {
        const double re = g(rng);
        a = Complex(re, g(rng));
    }
    HybridState s(layout, std::move(amps));
    return s.scaled(1.0 / std::sqrt(s.norm_squared()));
}

class Runner {
   public:
    Runner(const VerifyOptions &options, VerifyReport &report)
        : options_(options), report_(report), rng_(options.seed) {}

    void run() {
        const bool all = options_.suite == VerifySuite::All;
        if (all || options_.suite == VerifySuite::Gates) {
            guarded("gates", [this] { gates(); });
        }
        if (all || options_.suite == VerifySuite::Table2) {
            guarded("table2", [this] { table2(); });
        }
        if (all || options_.suite == VerifySuite::Oracle) {
            guarded("oracle", [this] { oracle(); });
        }
        if (all || options_.suite == VerifySuite::Properties) {
            guarded("properties", [this] { properties(); });
        }
        if (all || options_.suite == VerifySuite::Netlist) {
            guarded("netlist", [this] { netlist(); });
        }
    }

   private:
    // Reflection coefficient handed to every circuit run.
    Complex circuit_r(Complex r) const {
        return options_.inject_sign_fault ? -r : r;
    }

    Complex random_r() {
        std::uniform_real_distribution<double> lp(std::log(0.5), std::log(500.0));
        std::uniform_real_distribution<double> dt(-0.25, 0.25);
        const double p = std::exp(lp(rng_));
        return reflection_coefficient({p, dt(rng_)}).r;
    }

    void record(const std::string &suite, std::string name, bool passed, std::string detail) {
        report_.checks.push_back({suite, std::move(name), passed, std::move(detail)});
    }

    void guarded(const std::string &suite, const std::function<void()> &body) {
        try {
            body();
        } catch (const std::exception &e) {
            record(suite, "suite completed", false, std::string("exception: ") + e.what());
        }
    }

    void gates() {
        for (int d : {4, 8}) {
            const std::string tag = " (d=" + std::to_string(d) + ")";
            const Eigen::MatrixXcd x = shift_matrix(d, 1);
            const Eigen::MatrixXcd z = clock_matrix(d, 1);
            const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
            const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
            double dev = matrix_deviation(matrix_power(x, d), id);
            record("gates", "X^d = I" + tag, dev < kExact, "deviation " + sci(dev));
            dev = matrix_deviation(matrix_power(z, d), id);
            record("gates", "Z^d = I" + tag, dev < kExact, "deviation " + sci(dev));
            dev = matrix_deviation(z * x, omega * x * z);
            record("gates", "ZX = omega XZ" + tag, dev < kExact, "deviation " + sci(dev));
            dev = matrix_deviation(matrix_power(x, d - 1), x.adjoint());
            record("gates", "X^(d-1) = X^dagger" + tag, dev < kExact, "deviation " + sci(dev));
            dev = matrix_deviation(matrix_power(z, d - 1), z.adjoint());
            record("gates", "Z^(d-1) = Z^dagger" + tag, dev < kExact, "deviation " + sci(dev));
            dev = 0;
            for (int m = 0; m < d; ++m) {
                dev = std::max(dev, matrix_deviation(shift_matrix(d, m), matrix_power(x, m)));
                dev = std::max(dev, matrix_deviation(clock_matrix(d, m), matrix_power(z, m)));
            }
            record("gates", "X^m and Z^m consistent with powers" + tag, dev < kExact, "deviation " + sci(dev));
        }

        // Element-level gates on ideal inputs at r = -1.
        const Complex r = circuit_r(Complex{-1.0});
        double worst = 0;
        for (int q = 0; q < 4; ++q) {
            SchemeSpec in = SchemeSpec::uniform(4, 3, 0);
            in.shifts = {0, q};
            const HybridState input = ideal_state(in);
            for (int m = 0; m < 4; ++m) {
                SchemeSpec want = in;
                want.shifts[1] = (q + m) % 4;
                HybridState out = apply_x_gate(input, 3, m, r, q);
                worst = std::max(worst, out.max_abs_difference(ideal_state(want, out.layout_ptr())));
            }
        }
        record("gates", "X^m circuit maps |phi_0 0 q> to |phi_0 0 q+m>", worst < kExact, "max deviation " + sci(worst));

        worst = 0;
        for (int d : {4, 8}) {
            for (int k = 0; k < d; ++k) {
                for (int m = 0; m < d; ++m) {
                    SchemeSpec in{d, 2, k, {0}};
                    SchemeSpec want{d, 2, (k + m) % d, {0}};
                    HybridState out = apply_z_gate(ideal_state(in), m, d);
                    worst = std::max(worst, out.max_abs_difference(ideal_state(want, out.layout_ptr())));
                }
            }
        }
        record("gates", "Z^m circuit maps |phi_k0> to |phi_(k+m)0>", worst < kExact, "max deviation " + sci(worst));
    }

    void table2() {
        int rule_ok = 0;
        int reached = 0;
        double max_dev = 0;
        double max_entropy_dev = 0;
        const Complex r = circuit_r(Complex{-1.0});
        for (int k = 0; k < 4; ++k) {
            for (int p = 0; p < 4; ++p) {
                for (int q = 0; q < 4; ++q) {
                    const Table2Operation stored = parse_table2_label(table2_label(k, p, q));
                    if (stored.x_power == table2_rule_x_power(p, q) && stored.z_power == k) {
                        ++rule_ok;
                    }
                    const HybridState out = compose_table2(k, p, q, r);
                    const HybridState want = ideal_state(SchemeSpec{4, 3, k, {p, q}}, out.layout_ptr());
                    const double dev = std::max(out.max_abs_difference(want), std::abs(1.0 - fidelity(out, want)));
                    const double h = entanglement_entropy(out, Cut::photon(out.layout()));
                    max_dev = std::max(max_dev, dev);
                    max_entropy_dev = std::max(max_entropy_dev, std::abs(h - 2.0));
                    if (dev < kExact) {
                        ++reached;
                    }
                }
            }
        }
        record("table2", "stored entries follow m = (q - p) mod 4", rule_ok == 64,
               std::to_string(rule_ok) + "/64 entries match");
        std::string detail = std::to_string(reached) + "/64 Table-2 targets reached, max deviation ";
        detail += max_dev < kExact ? "< 1e-12" : sci(max_dev);
        record("table2", "compositions at r = -1", reached == 64, detail);
        record("table2", "composed targets carry 2 bits across the photon cut", max_entropy_dev < kEntropyTol,
               "max entropy deviation " + sci(max_entropy_dev));
    }

    void oracle() {
        constexpr int kPoints = 20;
        for (const SchemeCase &s : supported_schemes()) {
            const SchemeSpec spec = SchemeSpec::uniform(s.d, s.n, s.b);
            const Circuit circuit = generation_circuit(s.d, s.n, s.b);
            const HybridState source = source_state(s.d, s.n);
            double worst = 0;
            for (int i = 0; i < kPoints; ++i) {
                const Complex r = random_r();
                const HybridState out = run_circuit(circuit, circuit_r(r), source);
                worst = std::max(worst, out.max_abs_difference(generation_oracle(spec, r)));
            }
            record("oracle", "circuit = closed form at 20 random points, " + scheme_name(s), worst < kExact,
                   "max deviation " + sci(worst));

            const HybridState ideal_out = run_circuit(circuit, circuit_r(Complex{-1.0}), source);
            const HybridState ideal = ideal_state(spec, ideal_out.layout_ptr());
            const double f = fidelity(ideal_out, ideal);
            const double h = entanglement_entropy(ideal_out, Cut::photon(ideal_out.layout()));
            const double bits = std::log2(static_cast<double>(s.d));
            const bool ok = std::abs(1.0 - f) < kExact && std::abs(h - bits) < kEntropyTol;
            record("oracle", "ideal limit, " + scheme_name(s), ok, "F=" + fixed6(f) + " entropy=" + fixed6(h) + " bits");
        }

        // Detuned operating point of the 4D two-qudit scheme.
        const ScatteringParams detuned{25.0, 0.05};
        const Complex r = reflection_coefficient(detuned).r;
        const SchemeSpec spec = SchemeSpec::uniform(4, 2, 0);
        const HybridState out = run_circuit(generation_circuit(4, 2, 0), circuit_r(r), source_state(4, 2));
        const HybridState ideal = ideal_state(spec, out.layout_ptr());
        const HybridState closed = generation_oracle(spec, r);
        const double f = fidelity(out, ideal);
        const double f_oracle = fidelity(closed, ideal);
        const double e = efficiency(out, ideal);
        record("oracle", "detuned point P=25 detuning=0.05 matches closed form", std::abs(f - f_oracle) < 1e-6,
               "F=" + fixed6(f) + " closed form F=" + fixed6(f_oracle) + " E=" + fixed6(e));
        report_.notes.push_back(
            "known discrepancy: 4D two-qudit at P=25, detuning=0.05 evaluates to F=" + fixed6(f) + ", E=" + fixed6(e) +
            "; the reference figure quotes F=0.9823, E=0.9170. The computed value follows the closed-form "
            "amplitude law and is not adjusted.");
    }

    void properties() {
        auto layout = scheme_layout(4, 3);
        const int trials = 8;
        double bs_dev = 0;
        double hwp_dev = 0;
        double pbs_dev = 0;
        double pbs_norm = 0;
        for (int t = 0; t < trials; ++t) {
            const HybridState s = random_state(layout, rng_);
            for (const auto &[p1, p2] : {std::pair{"a1", "a2"}, std::pair{"a2", "v1"}, std::pair{"v2", "a1"}}) {
                bs_dev = std::max(bs_dev, apply_bs(apply_bs(s, p1, p2), p1, p2).max_abs_difference(s));
                const HybridState once = apply_pbs(s, p1, p2, p1, p2);
                pbs_norm = std::max(pbs_norm, std::abs(once.norm_squared() - s.norm_squared()));
                pbs_dev = std::max(pbs_dev, apply_pbs(once, p1, p2, p1, p2).max_abs_difference(s));
                const HybridState swapped = apply_pbs(s, p1, p2, p2, p1);
                pbs_norm = std::max(pbs_norm, std::abs(swapped.norm_squared() - s.norm_squared()));
            }
            for (const char *p : {"a1", "a2", "v1", "v2"}) {
                hwp_dev = std::max(hwp_dev, apply_hwp45(apply_hwp45(s, p), p).max_abs_difference(s));
            }
        }
        record("properties", "BS applied twice is the identity", bs_dev < kExact, "max deviation " + sci(bs_dev));
        record("properties", "HWP applied twice is the identity", hwp_dev < kExact, "max deviation " + sci(hwp_dev));
        record("properties", "PBS with matching ports is an involution", pbs_dev < kExact,
               "max deviation " + sci(pbs_dev));

        // Every basis vector must land on exactly one basis vector.
        auto small = scheme_layout(4, 2);
        bool permutation = pbs_norm < kExact;
        for (const auto &[o1, o2] : {std::pair{"a1", "a2"}, std::pair{"a2", "a1"}}) {
            std::vector<int> hits(small->dimension(), 0);
            for (std::size_t i = 0; i < small->dimension(); ++i) {
                HybridState e(small);
                e[i] = 1.0;
                const HybridState out = apply_pbs(e, "a1", "a2", o1, o2);
                int nonzero = 0;
                for (std::size_t j = 0; j < out.size(); ++j) {
                    if (std::abs(out[j]) > kExact) {
                        ++nonzero;
                        permutation = permutation && std::abs(out[j] - Complex{1.0}) < kExact;
                        ++hits[j];
                    }
                }
                permutation = permutation && nonzero == 1;
            }
            permutation = permutation && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
        }
        record("properties", "PBS is a norm-preserving permutation of basis states", permutation,
               "norm change " + sci(pbs_norm));

        bool monotone = true;
        double worst_increase = -1;
        for (const SchemeCase &s : {SchemeCase{4, 2, 1}, SchemeCase{4, 3, 2}, SchemeCase{8, 2, 5}}) {
            for (int t = 0; t < 4; ++t) {
                const Complex r = circuit_r(random_r());
                const Circuit c = generation_circuit(s.d, s.n, s.b);
                HybridState state = source_state(s.d, s.n);
                double prev = state.norm_squared();
                for (const auto &element : c.elements) {
                    state = apply_element(state, element, r);
                    const double now = state.norm_squared();
                    worst_increase = std::max(worst_increase, now - prev);
                    monotone = monotone && now <= prev + kExact;
                    prev = now;
                }
            }
        }
        for (int t = 0; t < trials; ++t) {
            const HybridState s = random_state(layout, rng_);
            const Complex r = circuit_r(random_r());
            const HybridState out = union_scatter(s, "b", "a2", r);
            worst_increase = std::max(worst_increase, out.norm_squared() - s.norm_squared());
            monotone = monotone && out.norm_squared() <= s.norm_squared() + kExact;
        }
        record("properties", "norm never increases along a circuit", monotone,
               "largest step change " + sci(worst_increase));
    }

    void netlist() {
        namespace fs = std::filesystem;
        if (options_.corpus_dir.empty() || !fs::is_directory(options_.corpus_dir)) {
            record("netlist", "corpus directory present", false, "not found: '" + options_.corpus_dir + "'");
            return;
        }
        const Complex r40 = reflection_coefficient({}).r;
        for (const CorpusEntry &entry : corpus_manifest()) {
            const std::string name(entry.file);
            const fs::path path = fs::path(options_.corpus_dir) / name;
            try {
                const NetlistDocument doc = load_netlist(path.string());
                const std::string printed = print_netlist(doc);
                const NetlistDocument again = parse_netlist(printed);
                const bool stable = again == doc && print_netlist(again) == printed;
                record("netlist", name + " round-trips through the printer", stable,
                       std::to_string(doc.circuit.elements.size()) + " elements");

                const SweepTarget target = SweepTarget::parse(entry.scheme);
                const bool same_program = doc == corpus_document(entry);
                double worst = 0;
                for (Complex r : {r40, random_r(), Complex{-1.0}}) {
                    const HybridState got = execute(doc, circuit_r(r)).state;
                    worst = std::max(worst, got.max_abs_difference(target.realize(r)));
                }
                record("netlist", name + " equals builder " + std::string(entry.scheme),
                       same_program && worst < kExact,
                       std::string(same_program ? "same elements" : "element lists differ") + ", max deviation " +
                           sci(worst));
            } catch (const ParseError &e) {
                record("netlist", name + " parses", false,
                       std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
            } catch (const std::exception &e) {
                record("netlist", name + " loads", false, e.what());
            }
        }
    }

    const VerifyOptions &options_;
    VerifyReport &report_;
    std::mt19937_64 rng_;
};

}  // namespace

VerifySuite parse_suite(std::string_view name) {
    if (name == "all") {
        return VerifySuite::All;
    }
    if (name == "gates") {
        return VerifySuite::Gates;
    }
    if (name == "table2") {
        return VerifySuite::Table2;
    }
    if (name == "oracle") {
        return VerifySuite::Oracle;
    }
    if (name == "properties") {
        return VerifySuite::Properties;
    }
    if (name == "netlist") {
        return VerifySuite::Netlist;
    }
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::span<const CorpusEntry> corpus_manifest() {
    return kCorpus;
}

NetlistDocument corpus_document(const CorpusEntry &entry) {
    const SweepTarget target = SweepTarget::parse(entry.scheme);
    NetlistDocument doc;
    doc.circuit = target.circuit();
    doc.emitter_init.assign(doc.circuit.layout->n_emitters(), SpinInit::Plus);
    doc.source = SourceDecl{PolInit::HV, doc.circuit.layout->paths().front()};
    doc.measures = {target.ideal_spec()};
    return doc;
}

std::string corpus_text(const CorpusEntry &entry) {
    std::ostringstream out;
    out << "# " << entry.title << "\n";
    out << "# builder: " << entry.scheme << "\n";
    out << print_netlist(corpus_document(entry));
    return out.str();
}

bool VerifyReport::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions &options) {
    VerifyReport report;
    Runner(options, report).run();
    return report;
}

void print_report(const VerifyReport &report, std::ostream &out) {
    std::size_t passed = 0;
    for (const auto &c : report.checks) {
        passed += c.passed ? 1 : 0;
        out << (c.passed ? "PASS" : "FAIL") << " [" << c.suite << "] " << c.name;
        if (!c.detail.empty()) {
            out << ": " << c.detail;
        }
        out << '\n';
    }
    for (const auto &note : report.notes) {
        out << "NOTE " << note << '\n';
    }
    out << passed << "/" << report.checks.size() << " checks passed\n";
}

}  // namespace heraldq
