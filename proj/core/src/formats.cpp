// Copyright 2026 The qlin Authors
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

#include "qlin/formats.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "qlin/error.hpp"

namespace qlin {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::string_view stripComment(std::string_view line, std::string_view marker) {
    const auto pos = line.find(marker);
    return pos == std::string_view::npos ? line : line.substr(0, pos);
}

// Non-empty lines, comment-stripped and split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        const auto raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++number;
        std::istringstream words{std::string(stripComment(raw, "#"))};
        Line line{number, {}};
        for (std::string w; words >> w;) {
            line.tokens.push_back(std::move(w));
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return lines;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char &c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::size_t parseIndex(std::string_view token, std::size_t line, std::string_view what) {
    std::size_t value = 0;
    const auto *first = token.data();
    const auto *last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line, "expected a non-negative integer for " + std::string(what) + ", got '" +
                                   std::string(token) + "'");
    }
    return value;
}

// Recursive-descent evaluator for + - * / ( ) numbers and pi.
class AngleExpression {
  public:
    explicit AngleExpression(std::string_view text) : text_(text) {}

    double evaluate() {
        const double value = sum();
        skipSpace();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
        }
        return value;
    }

  private:
    double sum() {
        double value = product();
        for (;;) {
            if (accept('+')) {
                value += product();
            } else if (accept('-')) {
                value -= product();
            } else {
                return value;
            }
        }
    }

    double product() {
        double value = unary();
        for (;;) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                value /= unary();
            } else {
                return value;
            }
        }
    }

    double unary() {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return atom();
    }

    double atom() {
        skipSpace();
        if (accept('(')) {
            const double value = sum();
            if (!accept(')')) {
                fail("missing ')'");
            }
            return value;
        }
        if (pos_ + 1 < text_.size() && std::tolower(static_cast<unsigned char>(text_[pos_])) == 'p' &&
            std::tolower(static_cast<unsigned char>(text_[pos_ + 1])) == 'i') {
            pos_ += 2;
            return std::numbers::pi;
        }
        double value = 0.0;
        const auto *first = text_.data() + pos_;
        const auto *last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) {
            fail("expected a number or 'pi'");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    bool accept(char c) {
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string &why) const {
        throw ParseError(0, "bad angle '" + std::string(text_) + "': " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

double angleAt(std::string_view expr, std::size_t line) {
    try {
        return parseAngle(expr);
    } catch (const ParseError &e) {
        if (e.line() != 0) {
            throw;
        }
        std::string message = e.what();
        throw ParseError(line, message.substr(message.find(": ") + 2));
    }
}

void appendAt(Circuit &c, const GateApp &gate, std::size_t line) {
    try {
        c.append(gate);
    } catch (const ParseError &) {
        throw;
    } catch (const QuantumError &e) {
        throw ParseError(line, std::string(errorCodeName(e.code())) + ": " + e.what(), e.code());
    }
}

void expectArgs(const Line &line, std::size_t count, std::string_view usage) {
    if (line.tokens.size() != count) {
        throw ParseError(line.number, "expected '" + std::string(usage) + "'");
    }
}

// "q[3]" -> 3, checking the register name.
std::size_t qasmOperand(std::string_view operand, std::string_view reg, std::size_t line) {
    const auto open = operand.find('[');
    const auto close = operand.find(']');
    if (open == std::string_view::npos || close != operand.size() - 1 || operand.substr(0, open) != reg) {
        throw ParseError(line, "expected operand of the form " + std::string(reg) + "[i], got '" +
                                   std::string(operand) + "'");
    }
    return parseIndex(operand.substr(open + 1, close - open - 1), line, "qubit index");
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

void appendQasmGate(Circuit &c, std::string_view name, std::optional<double> angle,
                    const std::vector<std::size_t> &wires, std::size_t line) {
    using std::numbers::pi;
    auto need = [&](std::size_t operands, bool angled) {
        if (wires.size() != operands || angle.has_value() != angled) {
            throw ParseError(line, "wrong arguments for gate '" + std::string(name) + "'");
        }
    };
    auto phase = [&](double a) {
        need(1, false);
        appendAt(c, Phase{a, wires[0]}, line);
    };
    if (name == "h") {
        need(1, false);
        appendAt(c, Hadamard{wires[0]}, line);
    } else if (name == "u1" || name == "p") {
        need(1, true);
        appendAt(c, Phase{*angle, wires[0]}, line);
    } else if (name == "cx" || name == "CX") {
        need(2, false);
        appendAt(c, ControlledNot{wires[0], wires[1]}, line);
    } else if (name == "x") {
        need(1, false);
        appendAt(c, Hadamard{wires[0]}, line);
        appendAt(c, Phase{pi, wires[0]}, line);
        appendAt(c, Hadamard{wires[0]}, line);
    } else if (name == "z") {
        phase(pi);
    } else if (name == "s") {
        phase(pi / 2);
    } else if (name == "sdg") {
        phase(-pi / 2);
    } else if (name == "t") {
        phase(pi / 4);
    } else if (name == "tdg") {
        phase(-pi / 4);
    } else {
        throw ParseError(line, "unsupported gate '" + std::string(name) + "'");
    }
}

}  // namespace

double parseAngle(std::string_view expr) {
    const double value = AngleExpression(expr).evaluate();
    if (!std::isfinite(value)) {
        throw ParseError(0, "angle '" + std::string(expr) + "' is not finite");
    }
    return value;
}

Circuit parseCircuitText(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(1, "empty circuit: expected 'qubits <n>'");
    }
    const Line &header = lines.front();
    if (lower(header.tokens[0]) != "qubits" || header.tokens.size() != 2) {
        throw ParseError(header.number, "expected 'qubits <n>' as the first statement");
    }
    Circuit c(parseIndex(header.tokens[1], header.number, "qubit count"));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line &line = lines[i];
        const std::string op = lower(line.tokens[0]);
        if (op == "h") {
            expectArgs(line, 2, "H <wire>");
            appendAt(c, Hadamard{parseIndex(line.tokens[1], line.number, "wire")}, line.number);
        } else if (op == "p") {
            expectArgs(line, 3, "P <angle> <wire>");
            const double angle = angleAt(line.tokens[1], line.number);
            appendAt(c, Phase{angle, parseIndex(line.tokens[2], line.number, "wire")}, line.number);
        } else if (op == "cnot") {
            expectArgs(line, 3, "CNOT <control> <target>");
            appendAt(c,
                     ControlledNot{parseIndex(line.tokens[1], line.number, "control"),
                                   parseIndex(line.tokens[2], line.number, "target")},
                     line.number);
        } else {
            throw ParseError(line.number, "unknown gate '" + line.tokens[0] + "'");
        }
    }
    return c;
}

Circuit parseQasm(std::string_view text) {
    std::optional<Circuit> circuit;
    std::string reg;
    bool sawHeader = false;

    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        const auto raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++number;
        std::string_view body = stripComment(raw, "//");
        std::size_t from = 0;
        while (from < body.size()) {
            auto semi = body.find(';', from);
            const std::string stmt = trim(body.substr(from, semi == std::string_view::npos ? semi : semi - from));
            if (semi == std::string_view::npos) {
                if (!stmt.empty()) {
                    throw ParseError(number, "missing ';' after '" + stmt + "'");
                }
                break;
            }
            from = semi + 1;
            if (stmt.empty()) {
                continue;
            }
            if (stmt.rfind("OPENQASM", 0) == 0) {
                if (trim(stmt.substr(8)) != "2.0") {
                    throw ParseError(number, "only OPENQASM 2.0 is supported");
                }
                sawHeader = true;
                continue;
            }
            if (stmt.rfind("include", 0) == 0) {
                continue;
            }
            if (stmt.rfind("qreg", 0) == 0) {
                if (circuit) {
                    throw ParseError(number, "only one qreg is supported");
                }
                const std::string decl = trim(stmt.substr(4));
                const auto open = decl.find('[');
                if (open == std::string::npos || decl.back() != ']') {
                    throw ParseError(number, "malformed qreg declaration");
                }
                reg = trim(decl.substr(0, open));
                circuit.emplace(parseIndex(decl.substr(open + 1, decl.size() - open - 2), number, "qreg size"));
                continue;
            }
            if (!circuit) {
                throw ParseError(number, "gate before qreg declaration");
            }

            // name[(expr)] operand[,operand]
            std::size_t nameEnd = 0;
            while (nameEnd < stmt.size() && (std::isalnum(static_cast<unsigned char>(stmt[nameEnd])) != 0 ||
                                             stmt[nameEnd] == '_')) {
                ++nameEnd;
            }
            const std::string name = stmt.substr(0, nameEnd);
            std::string rest = trim(stmt.substr(nameEnd));
            std::optional<double> angle;
            if (!rest.empty() && rest.front() == '(') {
                const auto close = rest.find(')');
                if (close == std::string::npos) {
                    throw ParseError(number, "missing ')' in gate parameters");
                }
                angle = angleAt(rest.substr(1, close - 1), number);
                rest = trim(rest.substr(close + 1));
            }
            std::vector<std::size_t> wires;
            std::istringstream operands(rest);
            for (std::string operand; std::getline(operands, operand, ',');) {
                wires.push_back(qasmOperand(trim(operand), reg, number));
            }
            appendQasmGate(*circuit, name, angle, wires, number);
        }
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    if (!sawHeader) {
        throw ParseError(1, "missing 'OPENQASM 2.0;' header");
    }
    if (!circuit) {
        throw ParseError(number, "no qreg declaration");
    }
    return *circuit;
}

Circuit parseCircuitAny(std::string_view text) {
    // The native format uses '#' comments, so skip QASM '//' lines before deciding.
    for (const Line &line : tokenize(text)) {
        if (line.tokens[0].rfind("//", 0) == 0) {
            continue;
        }
        if (line.tokens[0].rfind("OPENQASM", 0) == 0) {
            return parseQasm(text);
        }
        break;
    }
    return parseCircuitText(text);
}

Graph parseGraph(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(1, "empty graph: expected 'vertices <n>'");
    }
    const Line &header = lines.front();
    if (header.tokens[0] != "vertices" || header.tokens.size() != 2) {
        throw ParseError(header.number, "expected 'vertices <n>' as the first statement");
    }
    const std::size_t n = parseIndex(header.tokens[1], header.number, "vertex count");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line &line = lines[i];
        if (line.tokens[0] != "edge") {
            throw ParseError(line.number, "unknown statement '" + line.tokens[0] + "'");
        }
        expectArgs(line, 3, "edge <u> <v>");
        edges.push_back({parseIndex(line.tokens[1], line.number, "vertex"),
                         parseIndex(line.tokens[2], line.number, "vertex")});
        try {
            Graph(n, edges);
        } catch (const QuantumError &e) {
            throw ParseError(line.number, e.what(), e.code());
        }
    }
    return Graph(n, std::move(edges));
}

Hamiltonian parseHamiltonian(std::string_view text) {
    std::vector<HamiltonianTerm> terms;
    for (const Line &line : tokenize(text)) {
        expectArgs(line, 2, "<coefficient> <pauli string>");
        double coefficient = 0.0;
        const std::string &c = line.tokens[0];
        auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), coefficient);
        if (ec != std::errc{} || ptr != c.data() + c.size()) {
            throw ParseError(line.number, "bad coefficient '" + c + "'");
        }
        try {
            terms.push_back({coefficient, PauliString::parse(line.tokens[1])});
            if (terms.back().term.size() != terms.front().term.size()) {
                throw QuantumError(ErrorCode::InvalidHamiltonian, "all Pauli strings must have the same length");
            }
        } catch (const ParseError &) {
            throw;
        } catch (const QuantumError &e) {
            throw ParseError(line.number, e.what(), e.code());
        }
    }
    try {
        return Hamiltonian(std::move(terms));
    } catch (const QuantumError &e) {
        throw ParseError(1, e.what(), e.code());
    }
}

std::string readTextFile(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw QuantumError(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace qlin
