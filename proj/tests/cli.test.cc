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

// Runs the heraldq binary end to end.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome run(const std::string &args, const std::string &env = "") {
    const std::string cmd = env + std::string(HERALDQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, ""};
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path scratch(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / "heraldq_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(cli, generate_headline_metrics) {
    const Outcome o = run("generate --d 4 --n 2 --b 0 --purcell 40 --detuning 0");
    ASSERT_EQ(o.code, 0);
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_NEAR(j["metrics"]["fidelity"].get<double>(), 0.999695238097008, 1e-12);
    EXPECT_NEAR(j["metrics"]["efficiency"].get<double>(), 0.952104605626591, 1e-12);
    EXPECT_EQ(j["state"].size(), 4u);
}

TEST(cli, generate_ideal_dump) {
    const Outcome o = run("generate --d 4 --n 2 --b 0 --ideal");
    ASSERT_EQ(o.code, 0);
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["metrics"]["fidelity"].get<double>(), 1.0);
    ASSERT_EQ(j["state"].size(), 4u);
    for (const auto &rec : j["state"]) {
        EXPECT_NEAR(rec["re"].get<double>(), 0.5, 1e-15);
        EXPECT_EQ(rec["im"].get<double>(), 0.0);
    }
    EXPECT_EQ(j["state"][0]["emitters"], "++");
    EXPECT_EQ(j["state"][3]["emitters"], "--");
}

TEST(cli, invalid_arguments_exit_one) {
    EXPECT_EQ(run("generate --d 9").code, 1);
    EXPECT_EQ(run("generate --purcell -3").code, 1);
    EXPECT_EQ(run("generate --bogus").code, 1);
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("gate --target-qudit 2 --m 1").code, 1);
    EXPECT_EQ(run("gate --m 1").code, 1);
    EXPECT_EQ(run("sweep --scheme nope --out /dev/null").code, 1);
    EXPECT_EQ(run("sweep --scheme gen-d4-n2-b0 --format xml").code, 1);
    EXPECT_EQ(run("verify --suite nope").code, 1);
    EXPECT_EQ(run("run /nonexistent.net").code, 1);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(cli, gate_metrics) {
    const Outcome o = run("gate --target-qudit 3 --m 1");
    ASSERT_EQ(o.code, 0);
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_NEAR(j["metrics"]["fidelity"].get<double>(), 0.999847607436757, 1e-12);
    EXPECT_NEAR(j["metrics"]["efficiency"].get<double>(), 0.928740965707999, 1e-12);
    EXPECT_EQ(j["target"]["q"], nlohmann::json::array({0, 1}));
}

TEST(cli, verify_exit_codes) {
    const Outcome ok = run("verify");
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_NE(ok.out.find("64/64 Table-2 targets reached, max deviation < 1e-12"), std::string::npos);
    EXPECT_NE(ok.out.find("known discrepancy"), std::string::npos);
    EXPECT_EQ(run("verify --suite gates").code, 0);
    EXPECT_EQ(run("verify --suite table2 --inject-sign-fault").code, 2);
    EXPECT_EQ(run("verify --inject-sign-fault").code, 2);
}

TEST(cli, run_corpus_matches_generate) {
    const Outcome net = run(std::string("run ") + HERALDQ_CORPUS_DIR + "/fig2_q1.net --purcell 25 --detuning 0.05");
    const Outcome gen = run("generate --d 4 --n 2 --b 1 --purcell 25 --detuning 0.05");
    ASSERT_EQ(net.code, 0);
    ASSERT_EQ(gen.code, 0);
    const auto a = nlohmann::json::parse(net.out);
    const auto b = nlohmann::json::parse(gen.out);
    EXPECT_EQ(a["state"], b["state"]);
    EXPECT_EQ(a["metrics"][0]["fidelity"], b["metrics"]["fidelity"]);
}

TEST(cli, all_corpus_files_run) {
    for (const auto &entry : std::filesystem::directory_iterator(HERALDQ_CORPUS_DIR)) {
        EXPECT_EQ(run("run " + entry.path().string()).code, 0) << entry.path();
    }
}

TEST(cli, sweep_outputs_are_deterministic) {
    const auto csv1 = scratch("a.csv");
    const auto csv2 = scratch("b.csv");
    const auto json1 = scratch("a.json");
    const std::string args = "sweep --scheme compose-k0-p0-q1 --purcell 10 40 --detuning 0 0.05 0.1";
    ASSERT_EQ(run(args + " --out " + csv1.string()).code, 0);
    ASSERT_EQ(run(args + " --threads 3 --out " + csv2.string()).code, 0);
    ASSERT_EQ(run(args + " --format json --out " + json1.string()).code, 0);
    const std::string text = slurp(csv1);
    EXPECT_EQ(text, slurp(csv2));
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
    const auto j = nlohmann::json::parse(slurp(json1));
    EXPECT_EQ(j.size(), 6u);
    EXPECT_EQ(run("sweep --scheme gen-d4-n2-b0 --out /nonexistent-dir/x.csv").code, 1);
}

TEST(cli, sweep_default_file_name) {
    const auto dir = scratch("default_name").parent_path();
    const std::string cmd = "cd " + dir.string() + " && " + HERALDQ_CLI_PATH +
                            " sweep --scheme gate-x2 --purcell 40 --detuning 0 2>/dev/null";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "gate-x2_sweep.csv"));
}

TEST(cli, repeated_generate_is_byte_identical) {
    const auto a = scratch("g1.json");
    const auto b = scratch("g2.json");
    ASSERT_EQ(run("generate --d 8 --n 2 --b 5 --purcell 12 --detuning 0.03 --out " + a.string()).code, 0);
    ASSERT_EQ(run("generate --d 8 --n 2 --b 5 --purcell 12 --detuning 0.03 --out " + b.string()).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());
}

TEST(cli, scalar_kernels_agree_with_default) {
    const std::string args = "generate --d 4 --n 4 --b 3 --purcell 7 --detuning 0.11";
    const Outcome fast = run(args);
    const Outcome scalar = run(args, "HERALDQ_KERNELS=scalar ");
    ASSERT_EQ(fast.code, 0);
    ASSERT_EQ(scalar.code, 0);
    const auto a = nlohmann::json::parse(fast.out)["metrics"];
    const auto b = nlohmann::json::parse(scalar.out)["metrics"];
    for (const char *key : {"fidelity", "efficiency", "herald_failure", "entropy_bits"}) {
        EXPECT_NEAR(a[key].get<double>(), b[key].get<double>(), 1e-13) << key;
    }
}
