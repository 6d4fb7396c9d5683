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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace heraldq {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::string token)
    : std::runtime_error(
          std::to_string(line) + ":" + std::to_string(column) + ": " + message +
          (token.empty() ? std::string() : " (at '" + token + "')")),
      line_(line),
      column_(column),
      message_(std::move(message)),
      token_(std::move(token)) {
}

bool NetlistDocument::operator==(const NetlistDocument &other) const {
    bool same_layout = circuit.layout && other.circuit.layout && *circuit.layout == *other.circuit.layout;
    if (!same_layout || circuit.elements != other.circuit.elements || emitter_init != other.emitter_init ||
        !(source == other.source) || measures.size() != other.measures.size()) {
        return false;
    }
    for (std::size_t i = 0; i < measures.size(); ++i) {
        const auto &a = measures[i];
        const auto &b = other.measures[i];
        if (a.d != b.d || a.n != b.n || a.k != b.k || a.shifts != b.shifts) {
            return false;
        }
    }
    return true;
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

bool is_ident(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {
    }

    NetlistDocument run() {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t end = text_.find('\n', pos);
            if (end == std::string_view::npos) {
                end = text_.size();
            }
            ++line_no;
            std::string_view line = text_.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            statement(line_no, line);
            if (end == text_.size()) {
                break;
            }
            pos = end + 1;
        }
        finish();
        return std::move(doc_);
    }

   private:
    [[noreturn]] void fail(const Token &tok, std::string message) const {
        throw ParseError(line_, tok.column, std::move(message), std::string(tok.text));
    }

    static std::vector<Token> tokenize(std::string_view line) {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == '#') {
                break;
            }
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') {
                ++i;
            }
            out.push_back(Token{line.substr(start, i - start), start + 1});
        }
        return out;
    }

    void arity(const std::vector<Token> &toks, std::size_t expected) const {
        if (toks.size() < expected) {
            const Token &last = toks.back();
            throw ParseError(
                line_,
                last.column + last.text.size(),
                std::string(toks[0].text) + " expects " + std::to_string(expected - 1) + " operands",
                "");
        }
        if (toks.size() > expected) {
            fail(toks[expected], "unexpected operand");
        }
    }

    std::string path(const Token &tok) const {
        if (std::find(paths_.begin(), paths_.end(), tok.text) == paths_.end()) {
            fail(tok, "undeclared path");
        }
        return std::string(tok.text);
    }

    std::string emitter(const Token &tok) const {
        if (std::find(emitters_.begin(), emitters_.end(), tok.text) == emitters_.end()) {
            fail(tok, "undeclared emitter");
        }
        return std::string(tok.text);
    }

    void declare(const Token &tok, std::vector<std::string> &names, const char *what) {
        if (!is_ident(tok.text)) {
            fail(tok, std::string("invalid ") + what + " identifier");
        }
        if (std::find(names.begin(), names.end(), tok.text) != names.end()) {
            fail(tok, std::string("duplicate ") + what);
        }
        names.emplace_back(tok.text);
    }

    void element(const Token &kw, CircuitElement e) {
        try {
            // Validate against what has been declared so far.
            RegisterLayout partial(paths_, emitters_);
            validate_element(e, partial);
        } catch (const std::invalid_argument &ex) {
            fail(kw, ex.what());
        }
        elements_.push_back(std::move(e));
    }

    void statement(std::size_t line_no, std::string_view line) {
        line_ = line_no;
        last_line_ = line_no;
        last_line_len_ = line.size();
        auto toks = tokenize(line);
        if (toks.empty()) {
            return;
        }
        const Token &kw = toks[0];
        const std::string_view k = kw.text;
        if (k == "PATH") {
            if (toks.size() < 2) {
                arity(toks, 2);
            }
            for (std::size_t i = 1; i < toks.size(); ++i) {
                declare(toks[i], paths_, "path");
            }
        } else if (k == "EMITTER") {
            arity(toks, 3);
            declare(toks[1], emitters_, "emitter");
            if (toks[2].text == "+") {
                init_.push_back(SpinInit::Plus);
            } else if (toks[2].text == "-") {
                init_.push_back(SpinInit::Minus);
            } else {
                fail(toks[2], "emitter initial state must be + or -");
            }
        } else if (k == "SOURCE") {
            arity(toks, 3);
            if (source_) {
                fail(kw, "duplicate SOURCE");
            }
            SourceDecl s;
            if (toks[1].text == "H") {
                s.pol = PolInit::H;
            } else if (toks[1].text == "V") {
                s.pol = PolInit::V;
            } else if (toks[1].text == "HV") {
                s.pol = PolInit::HV;
            } else {
                fail(toks[1], "source polarization must be H, V or HV");
            }
            s.path = path(toks[2]);
            source_ = s;
        } else if (k == "BS") {
            arity(toks, 3);
            element(kw, BeamSplitter{path(toks[1]), path(toks[2])});
        } else if (k == "PBS") {
            arity(toks, 5);
            element(kw, PolarizingBeamSplitter{path(toks[1]), path(toks[2]), path(toks[3]), path(toks[4])});
        } else if (k == "HWP") {
            arity(toks, 2);
            element(kw, HalfWavePlate{path(toks[1])});
        } else if (k == "PS") {
            arity(toks, 4);
            PhaseShift ps;
            ps.path = path(toks[1]);
            if (toks[2].text == "H") {
                ps.filter = PolFilter::H;
            } else if (toks[2].text == "V") {
                ps.filter = PolFilter::V;
            } else if (toks[2].text == "*") {
                ps.filter = PolFilter::Both;
            } else {
                fail(toks[2], "polarization filter must be H, V or *");
            }
            std::string_view a = toks[3].text;
            auto res = std::from_chars(a.data(), a.data() + a.size(), ps.theta);
            if (res.ec != std::errc() || res.ptr != a.data() + a.size() || !std::isfinite(ps.theta)) {
                fail(toks[3], "angle must be a finite decimal number of radians");
            }
            element(kw, ps);
        } else if (k == "SCATTER") {
            arity(toks, 3);
            element(kw, EmitterUnion{emitter(toks[1]), path(toks[2])});
        } else if (k == "MEASURE") {
            measure(toks);
        } else {
            fail(kw, "unknown statement");
        }
    }

    void measure(const std::vector<Token> &toks) {
        arity(toks, 6);
        if (toks[1].text != "ideal") {
            fail(toks[1], "only 'ideal' targets are supported");
        }
        std::optional<int> d, n, k;
        std::optional<std::vector<int>> q;
        for (std::size_t i = 2; i < toks.size(); ++i) {
            const Token &t = toks[i];
            auto eq = t.text.find('=');
            if (eq == std::string_view::npos) {
                fail(t, "expected key=value");
            }
            std::string_view key = t.text.substr(0, eq);
            std::string_view value = t.text.substr(eq + 1);
            if (key == "q") {
                std::vector<int> shifts;
                std::size_t start = 0;
                while (true) {
                    std::size_t comma = value.find(',', start);
                    auto v = parse_int(value.substr(start, comma == std::string_view::npos ? comma : comma - start));
                    if (!v) {
                        fail(t, "shift list must be comma-separated integers");
                    }
                    shifts.push_back(*v);
                    if (comma == std::string_view::npos) {
                        break;
                    }
                    start = comma + 1;
                }
                q = shifts;
                continue;
            }
            auto v = parse_int(value);
            if (!v) {
                fail(t, "expected an integer value");
            }
            if (key == "d" && !d) {
                d = v;
            } else if (key == "n" && !n) {
                n = v;
            } else if (key == "k" && !k) {
                k = v;
            } else {
                fail(t, "unknown or repeated key");
            }
        }
        if (!d || !n || !k || !q) {
            fail(toks[0], "MEASURE needs d=, n=, k= and q=");
        }
        SchemeSpec spec;
        spec.d = *d;
        spec.n = *n;
        spec.k = *k;
        spec.shifts = *q;
        try {
            spec.validate();
        } catch (const DomainError &ex) {
            fail(toks[0], ex.what());
        }
        measures_.push_back({spec.normalized(), line_, toks[0].column});
    }

    void finish() {
        line_ = std::max<std::size_t>(last_line_, 1);
        Token end{"", last_line_len_ + 1};
        // A trailing newline leaves an empty final line; point at the newline instead.
        if (last_line_len_ == 0 && last_line_ > 1) {
            line_ = last_line_ - 1;
            end.column = previous_line_length();
        }
        if (!source_) {
            fail(end, "missing SOURCE");
        }
        if (paths_.empty()) {
            fail(end, "no PATH declared");
        }
        try {
            doc_.circuit.layout = make_layout(paths_, emitters_);
        } catch (const LayoutError &ex) {
            fail(end, ex.what());
        }
        doc_.circuit.elements = std::move(elements_);
        doc_.emitter_init = std::move(init_);
        doc_.source = *source_;
        for (auto &m : measures_) {
            line_ = m.line;
            try {
                ideal_state(m.spec, doc_.circuit.layout);
            } catch (const std::invalid_argument &ex) {
                fail(Token{"MEASURE", m.column}, ex.what());
            }
            doc_.measures.push_back(std::move(m.spec));
        }
    }

    std::size_t previous_line_length() const {
        std::string_view body = text_.substr(0, text_.size() - 1);
        std::size_t nl = body.rfind('\n');
        std::size_t len = nl == std::string_view::npos ? body.size() : body.size() - nl - 1;
        if (len > 0 && body.back() == '\r') {
            --len;
        }
        // Column of the terminating newline itself.
        return len + 1;
    }

    struct PendingMeasure {
        SchemeSpec spec;
        std::size_t line;
        std::size_t column;
    };

    std::string_view text_;
    std::size_t line_ = 1;
    std::size_t last_line_ = 1;
    std::size_t last_line_len_ = 0;
    std::vector<std::string> paths_;
    std::vector<std::string> emitters_;
    std::vector<SpinInit> init_;
    std::optional<SourceDecl> source_;
    std::vector<CircuitElement> elements_;
    std::vector<PendingMeasure> measures_;
    NetlistDocument doc_;
};

const char *pol_name(PolInit p) {
    switch (p) {
        case PolInit::H:
            return "H";
        case PolInit::V:
            return "V";
        case PolInit::HV:
            break;
    }
    return "HV";
}

}  // namespace

NetlistDocument parse_netlist(std::string_view text) {
    return Parser(text).run();
}

std::string print_netlist(const NetlistDocument &doc) {
    std::ostringstream out;
    const RegisterLayout &layout = *doc.circuit.layout;
    out << "PATH";
    for (const auto &p : layout.paths()) {
        out << ' ' << p;
    }
    out << '\n';
    for (std::size_t e = 0; e < layout.n_emitters(); ++e) {
        out << "EMITTER " << layout.emitters()[e] << ' ' << (doc.emitter_init[e] == SpinInit::Minus ? '-' : '+')
            << '\n';
    }
    out << "SOURCE " << pol_name(doc.source.pol) << ' ' << doc.source.path << '\n';
    for (const auto &e : doc.circuit.elements) {
        out << describe(e) << '\n';
    }
    for (const auto &m : doc.measures) {
        out << "MEASURE ideal d=" << m.d << " n=" << m.n << " k=" << m.k << " q=";
        for (std::size_t i = 0; i < m.shifts.size(); ++i) {
            out << (i ? "," : "") << m.shifts[i];
        }
        out << '\n';
    }
    return out.str();
}

NetlistDocument load_netlist(const std::string &filename) {
    std::ifstream in(filename, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open netlist '" + filename + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_netlist(buf.str());
}

HybridState initial_state(const NetlistDocument &doc) {
    return new_state(doc.circuit.layout, doc.source.pol, doc.source.path, doc.emitter_init);
}

ExecutionResult execute(const NetlistDocument &doc, Complex r) {
    ExecutionResult result{run_circuit(doc.circuit, r, initial_state(doc)), {}};
    for (const auto &m : doc.measures) {
        result.reports.push_back(evaluate_metrics(result.state, ideal_state(m, doc.circuit.layout)));
    }
    return result;
}

ExecutionResult execute(const NetlistDocument &doc, const ScatteringParams &params) {
    return execute(doc, reflection_coefficient(params).r);
}

}  // namespace heraldq
