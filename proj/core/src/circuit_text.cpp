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

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "qlin/circuit.hpp"

namespace qlin {

namespace {

std::string formatSignificant(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

std::string formatShortest(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

}  // namespace

std::string draw(const Circuit &c) {
    const std::size_t n = c.arity();
    std::vector<std::string> rows(n);
    std::size_t labelWidth = 0;
    for (std::size_t w = 0; w < n; ++w) {
        rows[w] = "q" + std::to_string(w) + ": ";
        labelWidth = std::max(labelWidth, rows[w].size());
    }
    for (auto &row : rows) {
        row.resize(labelWidth, ' ');
        row += '-';
    }

    for (const GateApp &gate : c.gates()) {
        std::vector<std::string> cells(n);
        if (const auto *h = std::get_if<Hadamard>(&gate)) {
            cells[h->wire] = "H";
        } else if (const auto *p = std::get_if<Phase>(&gate)) {
            cells[p->wire] = "P(" + formatSignificant(p->angle, 4) + ")";
        } else {
            const auto &cx = std::get<ControlledNot>(gate);
            const std::size_t lo = std::min(cx.control, cx.target);
            const std::size_t hi = std::max(cx.control, cx.target);
            for (std::size_t w = lo + 1; w < hi; ++w) {
                cells[w] = "|";
            }
            cells[cx.control] = "*";
            cells[cx.target] = "X";
        }
        std::size_t width = 1;
        for (const auto &cell : cells) {
            width = std::max(width, cell.size());
        }
        for (std::size_t w = 0; w < n; ++w) {
            std::string cell = cells[w].empty() ? std::string(width, '-') : cells[w];
            cell.resize(width, '-');
            rows[w] += cell + '-';
        }
    }

    std::string out;
    for (const auto &row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

std::string exportQasm(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n"
        << "include \"qelib1.inc\";\n"
        << "qreg q[" << c.arity() << "];\n";
    for (const GateApp &gate : c.gates()) {
        if (const auto *h = std::get_if<Hadamard>(&gate)) {
            out << "h q[" << h->wire << "];\n";
        } else if (const auto *p = std::get_if<Phase>(&gate)) {
            out << "u1(" << formatSignificant(p->angle, 15) << ") q[" << p->wire << "];\n";
        } else {
            const auto &cx = std::get<ControlledNot>(gate);
            out << "cx q[" << cx.control << "],q[" << cx.target << "];\n";
        }
    }
    return out.str();
}

std::string toNativeText(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.arity() << '\n';
    for (const GateApp &gate : c.gates()) {
        if (const auto *h = std::get_if<Hadamard>(&gate)) {
            out << "H " << h->wire << '\n';
        } else if (const auto *p = std::get_if<Phase>(&gate)) {
            out << "P " << formatShortest(p->angle) << ' ' << p->wire << '\n';
        } else {
            const auto &cx = std::get<ControlledNot>(gate);
            out << "CNOT " << cx.control << ' ' << cx.target << '\n';
        }
    }
    return out.str();
}

}  // namespace qlin
