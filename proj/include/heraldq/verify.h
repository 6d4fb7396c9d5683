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

#ifndef HERALDQ_VERIFY_H
#define HERALDQ_VERIFY_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <span>
#include <string_view>
#include <vector>

#include "heraldq/netlist.h"

namespace heraldq {

/// One checked-in netlist and the builder target it must reproduce.
struct CorpusEntry {
    std::string_view file;
    std::string_view scheme;
    std::string_view title;
};

std::span<const CorpusEntry> corpus_manifest();

/// The builder circuit of `entry` as a netlist document with its MEASURE line.
NetlistDocument corpus_document(const CorpusEntry &entry);

/// Canonical text of corpus_document() under a short comment header.
std::string corpus_text(const CorpusEntry &entry);

enum class VerifySuite { All, Gates, Table2, Oracle, Properties, Netlist };

/// Accepts all, gates, table2, oracle, properties, netlist.
VerifySuite parse_suite(std::string_view name);

struct VerifyOptions {
    VerifySuite suite = VerifySuite::All;
    /// Directory holding the .net corpus; the netlist suite fails without it.
    std::string corpus_dir;
    /// Negative control: every circuit run inside the suites uses -r.
    bool inject_sign_fault = false;
    std::uint64_t seed = 0x5eed2026;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    /// Known discrepancies and other informational lines.
    std::vector<std::string> notes;

    bool passed() const;
};

VerifyReport run_verification(const VerifyOptions &options);

/// One "PASS"/"FAIL" line per check, then the notes, then a summary line.
void print_report(const VerifyReport &report, std::ostream &out);

}  // namespace heraldq

#endif
