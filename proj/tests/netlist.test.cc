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

#include "heraldq/netlist.h"

#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "heraldq/verify.h"

using namespace heraldq;

namespace {

std::string corpus_path(const std::string &name) {
    return std::string(HERALDQ_CORPUS_DIR) + "/" + name;
}

ParseError parse_error(std::string_view text) {
    try {
        parse_netlist(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError for:\n" << text;
    return ParseError(0, 0, "", "");
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            return lines;
        }
        lines.push_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
}

}  // namespace

TEST(netlist, empty_input_reports_missing_source) {
    const ParseError e = parse_error("");
    EXPECT_EQ(e.message(), "missing SOURCE");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 1u);
}

TEST(netlist, minimal_document) {
    const NetlistDocument doc = parse_netlist("PATH a1\nSOURCE HV a1\n");
    EXPECT_TRUE(doc.circuit.elements.empty());
    EXPECT_TRUE(doc.measures.empty());
    EXPECT_EQ(doc.source.pol, PolInit::HV);
    EXPECT_EQ(doc.source.path, "a1");
    const HybridState s = initial_state(doc);
    EXPECT_NEAR(s.amplitude({Polarization::H, 0, 0}).real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s.amplitude({Polarization::V, 0, 0}).real(), 1.0 / std::sqrt(2.0), 1e-15);

    const ExecutionResult r = execute(doc, ScatteringParams{});
    EXPECT_TRUE(r.reports.empty());
    EXPECT_LT(r.state.max_abs_difference(s), 1e-15);
}

TEST(netlist, comments_blank_lines_and_crlf) {
    const NetlistDocument doc = parse_netlist(
        "# header\r\n\r\nPATH a1 a2   # two paths\r\nEMITTER a -\r\nSOURCE H a1\r\nBS a1 a2\r\nSCATTER a a2\r\n");
    EXPECT_EQ(doc.circuit.elements.size(), 2u);
    EXPECT_EQ(doc.emitter_init, (std::vector<SpinInit>{SpinInit::Minus}));
}

TEST(netlist, error_positions) {
    struct Case {
        const char *text;
        std::size_t line;
        std::size_t column;
        const char *message;
    };
    const Case cases[] = {
        {"PATH a1\nSOURCE HV a2\n", 2, 11, "undeclared path"},
        {"PATH a1\nSOURCE HV a1\nSOURCE H a1\n", 3, 1, "duplicate SOURCE"},
        {"PATH a1 a2\nSOURCE HV a1\nPS a1 * abc\n", 3, 9, "angle must be a finite decimal number of radians"},
        {"PATH a1 a2\nSOURCE HV a1\nPS a1 * 1e999\n", 3, 9, "angle must be a finite decimal number of radians"},
        {"PATH a1\nEMITTER e +\nSOURCE HV a1\nSCATTER f a1\n", 4, 9, "undeclared emitter"},
        {"PATH a1\nSOURCE HV a1\nFOO a1\n", 3, 1, "unknown statement"},
        {"PATH a1 a1\nSOURCE HV a1\n", 1, 9, "duplicate path"},
        {"PATH a1\nEMITTER e x\nSOURCE HV a1\n", 2, 11, "emitter initial state must be + or -"},
        {"PATH a1\nSOURCE HV a1\nBS a1\n", 3, 6, "BS expects 2 operands"},
        {"PATH a1\nSOURCE HV a1\nHWP a1 a1\n", 3, 8, "unexpected operand"},
        {"PATH 1a\nSOURCE HV a1\n", 1, 6, "invalid path identifier"},
    };
    for (const Case &c : cases) {
        const ParseError e = parse_error(c.text);
        EXPECT_EQ(e.line(), c.line) << c.text;
        EXPECT_EQ(e.column(), c.column) << c.text;
        if (*c.message) {
            EXPECT_EQ(e.message(), c.message) << c.text;
        }
    }
}

TEST(netlist, missing_source_points_at_end) {
    const ParseError e = parse_error("PATH a1\nBS a1 a1x");
    EXPECT_EQ(e.line(), 2u);
    const ParseError f = parse_error("PATH a1 a2\nBS a1 a2\n");
    EXPECT_EQ(f.message(), "missing SOURCE");
    EXPECT_EQ(f.line(), 2u);
    EXPECT_EQ(f.column(), 9u);
    const ParseError g = parse_error("PATH a1 a2\nBS a1 a2");
    EXPECT_EQ(g.line(), 2u);
    EXPECT_EQ(g.column(), 9u);
}

TEST(netlist, measure_statements) {
    const NetlistDocument doc = parse_netlist(
        "PATH a1 a2 v1 v2\nEMITTER a +\nEMITTER b +\nEMITTER c +\nEMITTER d +\nSOURCE HV a1\n"
        "MEASURE ideal d=4 n=3 k=1 q=2,3\n");
    ASSERT_EQ(doc.measures.size(), 1u);
    EXPECT_EQ(doc.measures[0].k, 1);
    EXPECT_EQ(doc.measures[0].shifts, (std::vector<int>{2, 3}));

    const ParseError wrong_layout =
        parse_error("PATH a1 a2\nEMITTER a +\nSOURCE HV a1\nMEASURE ideal d=4 n=2 k=0 q=0\n");
    EXPECT_EQ(wrong_layout.line(), 4u);
    EXPECT_EQ(wrong_layout.column(), 1u);

    const ParseError bad_d = parse_error("PATH a1 a2\nSOURCE HV a1\nMEASURE ideal d=6 n=2 k=0 q=0\n");
    EXPECT_EQ(bad_d.line(), 3u);
    EXPECT_EQ(parse_error("PATH a1\nSOURCE HV a1\nMEASURE ideal d=4 n=2 k=0\n").line(), 3u);
    EXPECT_EQ(parse_error("PATH a1\nSOURCE HV a1\nMEASURE ideal d=4 n=2 k=0 q=x\n").column(), 27u);
    EXPECT_EQ(parse_error("PATH a1\nSOURCE HV a1\nMEASURE real d=4 n=2 k=0 q=0\n").column(), 9u);
}

TEST(netlist, error_positions_lie_inside_input) {
    const std::string base = corpus_text(corpus_manifest()[7]);
    const std::string alphabet = "abcdz019 -+*#=,.\nHVPSBWX";
    std::mt19937_64 rng(3);
    int errors = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::string text = base;
        const int edits = 1 + static_cast<int>(rng() % 3);
        for (int e = 0; e < edits; ++e) {
            const std::size_t at = rng() % (text.size() + 1);
            switch (rng() % 3) {
                case 0:
                    text.insert(text.begin() + static_cast<std::ptrdiff_t>(at), alphabet[rng() % alphabet.size()]);
                    break;
                case 1:
                    if (at < text.size()) {
                        text.erase(at, 1);
                    }
                    break;
                default:
                    if (at < text.size()) {
                        text[at] = alphabet[rng() % alphabet.size()];
                    }
                    break;
            }
        }
        try {
            parse_netlist(text);
        } catch (const ParseError &err) {
            ++errors;
            const auto lines = split_lines(text);
            ASSERT_GE(err.line(), 1u) << text;
            ASSERT_LE(err.line(), lines.size()) << text;
            const std::string_view line = lines[err.line() - 1];
            ASSERT_GE(err.column(), 1u) << text;
            // One past the last character marks the end of the line.
            ASSERT_LE(err.column(), line.size() + 1) << err.what() << "\n" << text;
            if (!err.token().empty()) {
                EXPECT_EQ(line.substr(err.column() - 1, err.token().size()), err.token()) << err.what();
            }
        }
    }
    EXPECT_GT(errors, 50);
}

TEST(netlist, corpus_two_qudit_file) {
    const NetlistDocument doc = load_netlist(corpus_path("fig2_q0.net"));
    EXPECT_EQ(doc.circuit.elements.size(), 11u);
    EXPECT_EQ(doc.circuit.union_count(), 4u);
    const ExecutionResult r = execute(doc, ScatteringParams{40.0, 0.0});
    ASSERT_EQ(r.reports.size(), 1u);
    EXPECT_NEAR(r.reports[0].fidelity, 0.999695238097008, 1e-12);
    EXPECT_NEAR(r.reports[0].efficiency, 0.952104605626591, 1e-12);
    const Complex rr(-40.0 / 41.0);
    EXPECT_LT(r.state.max_abs_difference(generation_oracle(SchemeSpec::uniform(4, 2, 0), rr)), 1e-12);
}

TEST(netlist, corpus_three_qudit_file_at_ideal_scattering) {
    const NetlistDocument doc = load_netlist(corpus_path("fig4_b0.net"));
    const ExecutionResult r = execute(doc, Complex(-1.0));
    ASSERT_EQ(r.reports.size(), 1u);
    EXPECT_NEAR(r.reports[0].fidelity, 1.0, 1e-12);
    EXPECT_NEAR(r.reports[0].entropy_bits, 2.0, 1e-9);
}

TEST(netlist, corpus_round_trip_and_builder_equivalence) {
    for (const CorpusEntry &entry : corpus_manifest()) {
        const std::string name(entry.file);
        const NetlistDocument doc = load_netlist(corpus_path(name));
        const std::string printed = print_netlist(doc);
        const NetlistDocument again = parse_netlist(printed);
        EXPECT_TRUE(again == doc) << name;
        EXPECT_EQ(print_netlist(again), printed) << name;
        EXPECT_TRUE(doc == corpus_document(entry)) << name;
    }
}

TEST(netlist, corpus_files_are_current) {
    // The checked-in files equal what the builders produce today.
    for (const CorpusEntry &entry : corpus_manifest()) {
        std::ifstream in(corpus_path(std::string(entry.file)), std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        EXPECT_EQ(buf.str(), corpus_text(entry)) << entry.file;
    }
}

TEST(netlist, printer_canonicalizes_spacing) {
    const NetlistDocument doc =
        parse_netlist("PATH   a1\ta2\nEMITTER a +\nSOURCE V a2\nPS a2 V 0.25\nPS a1 * 1e-3\nHWP a1\n");
    EXPECT_EQ(print_netlist(doc), "PATH a1 a2\nEMITTER a +\nSOURCE V a2\nPS a2 V 0.25\nPS a1 * 0.001\nHWP a1\n");
}

TEST(netlist, load_missing_file) {
    EXPECT_THROW(load_netlist("/nonexistent/file.net"), std::runtime_error);
}
