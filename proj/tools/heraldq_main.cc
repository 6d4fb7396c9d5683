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

// Command-line front end: generate, gate, sweep, verify, run.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heraldq/metrics.h"
#include "heraldq/netlist.h"
#include "heraldq/scattering.h"
#include "heraldq/schemes.h"
#include "heraldq/sweep.h"
#include "heraldq/verify.h"
#include "json.hpp"

#ifndef HERALDQ_CORPUS_DIR
#define HERALDQ_CORPUS_DIR ""
#endif

namespace {

using namespace heraldq;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;

struct PhysicsFlags {
    double purcell = 40.0;
    double detuning = 0.0;

    ScatteringParams params() const {
        ScatteringParams p{purcell, detuning};
        p.validate();
        return p;
    }
};

void add_physics(CLI::App *cmd, PhysicsFlags &flags) {
    cmd->add_option("--purcell", flags.purcell, "Purcell factor P")->capture_default_str();
    cmd->add_option("--detuning", flags.detuning, "Detuning in units of gamma_1D")->capture_default_str();
}

json params_json(const ScatteringParams &p) {
    const Complex r = reflection_coefficient(p).r;
    return {{"purcell", p.purcell}, {"detuning", p.detuning}, {"r", {{"re", r.real()}, {"im", r.imag()}}}};
}

void write_output(const json &doc, const std::string &out) {
    const std::string text = doc.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text)) {
        throw std::runtime_error("cannot write '" + out + "'");
    }
}

json spec_json(const SchemeSpec &s) {
    return {{"d", s.d}, {"n", s.n}, {"k", s.k}, {"q", s.shifts}};
}

struct GenerateFlags {
    int d = 4;
    int n = 2;
    int b = 0;
    int k = 0;
    bool ideal = false;
    PhysicsFlags physics;
    std::string out;
};

int cmd_generate(const GenerateFlags &f) {
    const SchemeSpec spec = SchemeSpec::uniform(f.d, f.n, f.b, f.k);
    spec.validate();
    const ScatteringParams params = f.physics.params();
    HybridState state = f.ideal ? ideal_state(spec) : SweepTarget::generate(f.d, f.n, f.b, f.k).realize(
                                                          reflection_coefficient(params).r);
    const HybridState ideal = ideal_state(spec, state.layout_ptr());
    json doc;
    doc["scheme"] = spec_json(spec);
    doc["ideal"] = f.ideal;
    if (!f.ideal) {
        doc["params"] = params_json(params);
    }
    doc["state"] = dump_state(state);
    doc["metrics"] = to_json(evaluate_metrics(state, ideal));
    write_output(doc, f.out);
    return kExitOk;
}

struct GateFlags {
    int target_qudit = 3;
    int m = 1;
    int n = 3;
    PhysicsFlags physics;
    std::string out;
};

int cmd_gate(const GateFlags &f) {
    const ScatteringParams params = f.physics.params();
    const SchemeSpec input = SchemeSpec::uniform(4, f.n, 0);
    input.validate();
    if (f.target_qudit < 3 || f.target_qudit > f.n) {
        throw DomainError("--target-qudit must be in [3, n]");
    }
    if (f.m < 0 || f.m > 3) {
        throw DomainError("--m must be in [0, 3]");
    }
    SchemeSpec want = input;
    want.shifts[static_cast<std::size_t>(f.target_qudit - 2)] = f.m;
    const HybridState out =
        apply_x_gate(ideal_state(input), f.target_qudit, f.m, reflection_coefficient(params).r, 0);
    json doc;
    doc["gate"] = {{"target_qudit", f.target_qudit}, {"m", f.m}};
    doc["input"] = spec_json(input);
    doc["target"] = spec_json(want);
    doc["params"] = params_json(params);
    doc["state"] = dump_state(out);
    doc["metrics"] = to_json(evaluate_metrics(out, ideal_state(want, out.layout_ptr())));
    write_output(doc, f.out);
    return kExitOk;
}

struct SweepFlags {
    std::string scheme;
    std::string out;
    std::string format = "csv";
    std::vector<double> purcell;
    std::vector<double> detuning;
    unsigned threads = 0;
};

int cmd_sweep(const SweepFlags &f) {
    SweepGrid grid = SweepGrid::defaults(SweepTarget::parse(f.scheme));
    if (!f.purcell.empty()) {
        grid.purcell = f.purcell;
    }
    if (!f.detuning.empty()) {
        grid.detuning = f.detuning;
    }
    const SweepFormat format = f.format == "json" ? SweepFormat::Json : SweepFormat::Csv;
    const std::string out = f.out.empty() ? grid.target.id() + "_sweep." + f.format : f.out;
    const auto rows = run_sweep(grid, f.threads);
    emit(rows, format, out);
    std::cerr << rows.size() << " rows written to " << out << "\n";
    return kExitOk;
}

struct VerifyFlags {
    std::string suite = "all";
    std::string corpus = HERALDQ_CORPUS_DIR;
    std::uint64_t seed = VerifyOptions{}.seed;
    bool inject_sign_fault = false;
};

int cmd_verify(const VerifyFlags &f) {
    VerifyOptions options;
    options.suite = parse_suite(f.suite);
    options.corpus_dir = f.corpus;
    options.seed = f.seed;
    options.inject_sign_fault = f.inject_sign_fault;
    const VerifyReport report = run_verification(options);
    print_report(report, std::cout);
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

struct RunFlags {
    std::string netlist;
    PhysicsFlags physics;
    std::string out;
};

int cmd_run(const RunFlags &f) {
    const ScatteringParams params = f.physics.params();
    const NetlistDocument doc = load_netlist(f.netlist);
    const ExecutionResult result = execute(doc, params);
    json out;
    out["netlist"] = f.netlist;
    out["params"] = params_json(params);
    out["elements"] = doc.circuit.elements.size();
    out["state"] = dump_state(result.state);
    json reports = json::array();
    for (std::size_t i = 0; i < result.reports.size(); ++i) {
        json m = to_json(result.reports[i]);
        m["ideal"] = spec_json(doc.measures[i]);
        reports.push_back(std::move(m));
    }
    out["metrics"] = std::move(reports);
    write_output(out, f.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"heraldq: heralded high-dimensional entanglement with emitter-waveguide unions"};
    app.require_subcommand(1);

    GenerateFlags gen;
    auto *generate = app.add_subcommand("generate", "Generate a maximally entangled qudit state");
    generate->add_option("--d", gen.d, "Qudit dimension (power of two >= 4)")->capture_default_str();
    generate->add_option("--n", gen.n, "Number of qudits")->capture_default_str();
    generate->add_option("--b", gen.b, "Shift of every stationary qudit")->capture_default_str();
    generate->add_option("--k", gen.k, "Photon phase index (applies Z^k)")->capture_default_str();
    generate->add_flag("--ideal", gen.ideal, "Dump the ideal target state instead");
    add_physics(generate, gen.physics);
    generate->add_option("--out", gen.out, "Output file (default stdout)");

    GateFlags gate;
    auto *gate_cmd = app.add_subcommand("gate", "Apply X^m to a stationary qudit of |phi_0...0>");
    gate_cmd->add_option("--target-qudit", gate.target_qudit, "1-based qudit index, >= 3")->required();
    gate_cmd->add_option("--m", gate.m, "Shift power in [0, 3]")->required();
    gate_cmd->add_option("--n", gate.n, "Number of qudits")->capture_default_str();
    add_physics(gate_cmd, gate.physics);
    gate_cmd->add_option("--out", gate.out, "Output file (default stdout)");

    SweepFlags sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Fidelity/efficiency over a (P, detuning) grid");
    sweep_cmd
        ->add_option("--scheme", sweep.scheme, "gen-d<d>-n<n>-b<b>[-k<k>], compose-k<k>-p<p>-q<q> or gate-x<m>")
        ->required();
    sweep_cmd->add_option("--out", sweep.out, "Output file (default <scheme>_sweep.<format>)");
    sweep_cmd->add_option("--format", sweep.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep_cmd->add_option("--purcell", sweep.purcell, "Purcell axis (default 40 log-spaced points on [1, 100])");
    sweep_cmd->add_option("--detuning", sweep.detuning, "Detuning axis (default 41 points on [0, 0.2])");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = hardware)")->capture_default_str();

    VerifyFlags verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
    verify_cmd->add_option("--suite", verify.suite, "all, gates, table2, oracle, properties or netlist")
        ->check(CLI::IsMember({"all", "gates", "table2", "oracle", "properties", "netlist"}))
        ->capture_default_str();
    verify_cmd->add_option("--corpus", verify.corpus, "Netlist corpus directory")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "Seed for the random operating points")->capture_default_str();
    verify_cmd->add_flag("--inject-sign-fault", verify.inject_sign_fault)->group("");

    RunFlags run;
    auto *run_cmd = app.add_subcommand("run", "Execute a .net circuit file");
    run_cmd->add_option("netlist", run.netlist, "Path to the .net file")->required();
    add_physics(run_cmd, run.physics);
    run_cmd->add_option("--out", run.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(gen);
        }
        if (gate_cmd->parsed()) {
            return cmd_gate(gate);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(sweep);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify);
        }
        return cmd_run(run);
    } catch (const ParseError &e) {
        std::cerr << "error: " << run.netlist << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitInvalid;
}
