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
#include <chrono>
#include <sstream>

#include "gtest/gtest.h"

using namespace heraldq;

namespace {

VerifyOptions options(VerifySuite suite, bool fault = false) {
    VerifyOptions o;
    o.suite = suite;
    o.corpus_dir = HERALDQ_CORPUS_DIR;
    o.inject_sign_fault = fault;
    return o;
}

}  // namespace

TEST(verify, all_suites_pass_quickly) {
    const auto start = std::chrono::steady_clock::now();
    const VerifyReport report = run_verification(options(VerifySuite::All));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto &c : report.checks) {
        EXPECT_TRUE(c.passed) << c.suite << ": " << c.name << ": " << c.detail;
    }
    EXPECT_TRUE(report.passed());
    EXPECT_LT(seconds, 10.0);
    for (const char *suite : {"gates", "table2", "oracle", "properties", "netlist"}) {
        EXPECT_TRUE(std::any_of(report.checks.begin(), report.checks.end(),
                                [&](const CheckResult &c) { return c.suite == suite; }))
            << suite;
    }
}

TEST(verify, table2_summary_line) {
    const VerifyReport report = run_verification(options(VerifySuite::Table2));
    std::ostringstream out;
    print_report(report, out);
    EXPECT_NE(out.str().find("64/64 Table-2 targets reached, max deviation < 1e-12"), std::string::npos)
        << out.str();
}

TEST(verify, detuned_discrepancy_is_reported) {
    const VerifyReport report = run_verification(options(VerifySuite::Oracle));
    ASSERT_FALSE(report.notes.empty());
    EXPECT_NE(report.notes[0].find("known discrepancy"), std::string::npos);
    EXPECT_NE(report.notes[0].find("0.9823"), std::string::npos);
    EXPECT_NE(report.notes[0].find("0.994462"), std::string::npos);
    EXPECT_TRUE(report.passed());
}

TEST(verify, sign_fault_is_caught) {
    for (VerifySuite s : {VerifySuite::All, VerifySuite::Gates, VerifySuite::Table2, VerifySuite::Oracle,
                          VerifySuite::Netlist}) {
        EXPECT_FALSE(run_verification(options(s, true)).passed()) << static_cast<int>(s);
    }
}

TEST(verify, missing_corpus_fails_netlist_suite) {
    VerifyOptions o = options(VerifySuite::Netlist);
    o.corpus_dir = "/nonexistent";
    EXPECT_FALSE(run_verification(o).passed());
}

TEST(verify, suite_names) {
    EXPECT_EQ(parse_suite("all"), VerifySuite::All);
    EXPECT_EQ(parse_suite("gates"), VerifySuite::Gates);
    EXPECT_EQ(parse_suite("table2"), VerifySuite::Table2);
    EXPECT_EQ(parse_suite("oracle"), VerifySuite::Oracle);
    EXPECT_EQ(parse_suite("properties"), VerifySuite::Properties);
    EXPECT_EQ(parse_suite("netlist"), VerifySuite::Netlist);
    EXPECT_THROW(parse_suite("everything"), DomainError);
}
