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

#ifndef HERALDQ_NETLIST_H
#define HERALDQ_NETLIST_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "heraldq/elements.h"
#include "heraldq/metrics.h"
#include "heraldq/schemes.h"

// Line-oriented circuit description, one statement per line, '#' starts a
// comment:
//
//   PATH <id>...
//   EMITTER <id> (+|-)
//   SOURCE (H|V|HV) <path>
//   BS <p1> <p2>
//   PBS <in1> <in2> <out1> <out2>
//   HWP <path>
//   PS <path> (H|V|*) <radians>
//   SCATTER <emitter> <path>
//   MEASURE ideal d=<d> n=<n> k=<k> q=<q,...>
//
// Identifiers must be declared before use and exactly one SOURCE is required.

namespace heraldq {

class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string message, std::string token);

    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }
    const std::string &message() const {
        return message_;
    }
    const std::string &token() const {
        return token_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::string token_;
};

struct SourceDecl {
    PolInit pol = PolInit::HV;
    std::string path;
    bool operator==(const SourceDecl &) const = default;
};

struct NetlistDocument {
    Circuit circuit;
    std::vector<SpinInit> emitter_init;
    SourceDecl source;
    std::vector<SchemeSpec> measures;

    bool operator==(const NetlistDocument &other) const;
};

/// Throws ParseError.
NetlistDocument parse_netlist(std::string_view text);

/// Canonical form: PATH line, EMITTER lines, SOURCE, elements, MEASURE lines;
/// single spaces, shortest round-trip angles.
std::string print_netlist(const NetlistDocument &doc);

NetlistDocument load_netlist(const std::string &filename);

HybridState initial_state(const NetlistDocument &doc);

struct ExecutionResult {
    HybridState state;
    /// One report per MEASURE statement, in order.
    std::vector<MetricsReport> reports;
};

ExecutionResult execute(const NetlistDocument &doc, const ScatteringParams &params);
ExecutionResult execute(const NetlistDocument &doc, Complex r);

}  // namespace heraldq

#endif
