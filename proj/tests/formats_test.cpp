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

#include <numbers>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "qlin/error.hpp"
#include "qlin/std_circuits.hpp"

using namespace qlin;
using std::numbers::pi;

namespace {

struct ParseFailure {
    std::size_t line = 0;
    ErrorCode cause = ErrorCode::InvalidArgument;
};

template <class F>
ParseFailure parseFailure(F &&f) {
    try {
        f();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        return {e.line(), e.cause()};
    }
    ADD_FAILURE() << "expected a ParseError";
    return {};
}

}  // namespace

TEST(Formats, native_circuit) {
    const Circuit c = parseCircuitText(
        "# Bell pair\n"
        "qubits 2\n"
        "h 0   # comment after a gate\n"
        "\n"
        "CNOT 0 1\n"
        "P pi/4 1\n");
    EXPECT_EQ(c, addP(toBellBasis(), pi / 4, 1));
    EXPECT_EQ(parseCircuitText("qubits 0\n"), identity(0));
}

TEST(Formats, native_circuit_errors) {
    auto missing = parseFailure([] { parseCircuitText("H 0\n"); });
    EXPECT_EQ(missing.line, 1u);

    auto unknown = parseFailure([] { parseCircuitText("qubits 1\n\nFOO 0\n"); });
    EXPECT_EQ(unknown.line, 3u);

    auto wire = parseFailure([] { parseCircuitText("qubits 2\nH 0\nCNOT 1 1\n"); });
    EXPECT_EQ(wire.line, 3u);
    EXPECT_EQ(wire.cause, ErrorCode::ControlEqualsTarget);

    auto range = parseFailure([] { parseCircuitText("qubits 2\nH 2\n"); });
    EXPECT_EQ(range.line, 2u);
    EXPECT_EQ(range.cause, ErrorCode::WireOutOfRange);

    auto angle = parseFailure([] { parseCircuitText("qubits 1\nP pi/ 0\n"); });
    EXPECT_EQ(angle.line, 2u);

    auto arity = parseFailure([] { parseCircuitText("qubits 1\nH\n"); });
    EXPECT_EQ(arity.line, 2u);
}

TEST(Formats, angles) {
    EXPECT_DOUBLE_EQ(parseAngle("pi"), pi);
    EXPECT_DOUBLE_EQ(parseAngle("-pi/4"), -pi / 4);
    EXPECT_DOUBLE_EQ(parseAngle("2*pi/3"), 2 * pi / 3);
    EXPECT_DOUBLE_EQ(parseAngle("(1+1)*0.25"), 0.5);
    EXPECT_DOUBLE_EQ(parseAngle("1.5e-3"), 1.5e-3);
    EXPECT_DOUBLE_EQ(parseAngle(" PI / 2 "), pi / 2);
    EXPECT_THROW(parseAngle("pi pi"), ParseError);
    EXPECT_THROW(parseAngle("(1"), ParseError);
    EXPECT_THROW(parseAngle(""), ParseError);
    EXPECT_THROW(parseAngle("1/0"), ParseError);
}

TEST(Formats, qasm_import) {
    const Circuit c = parseQasm(
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";\n"
        "// comment\n"
        "qreg q[2];\n"
        "h q[0]; cx q[0],q[1];\n"
        "t q[1];\n"
        "u1(-pi/2) q[0];\n");
    EXPECT_EQ(c, addP(addP(toBellBasis(), pi / 4, 1), -pi / 2, 0));

    // Derived gates expand into H and P with the same semantics.
    const Circuit derived = parseQasm("OPENQASM 2.0;\nqreg r[1];\nx r[0];\nz r[0];\ns r[0];\nsdg r[0];\ntdg r[0];\np(0.1) r[0];\n");
    oracle::Matrix expected = oracle::phase(0.1) * oracle::phase(-pi / 4) * oracle::phase(-pi / 2) *
                              oracle::phase(pi / 2) * oracle::pauliZ() * oracle::pauliX();
    EXPECT_LE(oracle::maxAbsDiff(matrixOf(derived), expected), 1e-12);
}

TEST(Formats, qasm_errors) {
    EXPECT_EQ(parseFailure([] { parseQasm("qreg q[1];\nh q[0];\n"); }).line, 1u);
    EXPECT_EQ(parseFailure([] { parseQasm("OPENQASM 3.0;\nqreg q[1];\n"); }).line, 1u);
    EXPECT_EQ(parseFailure([] { parseQasm("OPENQASM 2.0;\nqreg q[1];\nccx q[0];\n"); }).line, 3u);
    EXPECT_EQ(parseFailure([] { parseQasm("OPENQASM 2.0;\nqreg q[1];\nh q[0]\n"); }).line, 3u);
    EXPECT_EQ(parseFailure([] { parseQasm("OPENQASM 2.0;\nh q[0];\n"); }).line, 2u);
    auto range = parseFailure([] { parseQasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[2];\n"); });
    EXPECT_EQ(range.line, 3u);
    EXPECT_EQ(range.cause, ErrorCode::WireOutOfRange);
}

TEST(Formats, detects_circuit_format) {
    EXPECT_EQ(parseCircuitAny("qubits 1\nH 0\n"), hGate());
    EXPECT_EQ(parseCircuitAny("// header comment\nOPENQASM 2.0;\nqreg q[1];\nh q[0];\n"), hGate());
    EXPECT_EQ(parseCircuitAny(exportQasm(qft(3))).size(), qft(3).size());
}

TEST(Formats, graph) {
    const Graph g = parseGraph("# triangle\nvertices 3\nedge 0 1\nedge 1 2\nedge 0 2\n");
    EXPECT_EQ(g.vertexCount(), 3u);
    EXPECT_EQ(g.edges().size(), 3u);
    EXPECT_EQ(parseGraph("vertices 2\n").edges().size(), 0u);

    EXPECT_EQ(parseFailure([] { parseGraph("edge 0 1\n"); }).line, 1u);
    auto loop = parseFailure([] { parseGraph("vertices 2\nedge 1 1\n"); });
    EXPECT_EQ(loop.line, 2u);
    EXPECT_EQ(loop.cause, ErrorCode::InvalidGraph);
    auto dup = parseFailure([] { parseGraph("vertices 3\nedge 0 1\nedge 1 0\n"); });
    EXPECT_EQ(dup.cause, ErrorCode::InvalidGraph);
    EXPECT_EQ(parseFailure([] { parseGraph("vertices 3\nedge 0\n"); }).line, 2u);
}

TEST(Formats, hamiltonian) {
    const Hamiltonian h = parseHamiltonian("# two terms\n0.5 ZZ\n-1.25 XI\n");
    ASSERT_EQ(h.terms().size(), 2u);
    EXPECT_EQ(h.qubitCount(), 2u);
    EXPECT_DOUBLE_EQ(h.terms()[1].coefficient, -1.25);
    EXPECT_EQ(h.terms()[1].term.toString(), "XI");

    EXPECT_EQ(parseFailure([] { parseHamiltonian("1.0 ZQ\n"); }).cause, ErrorCode::InvalidHamiltonian);
    auto lengths = parseFailure([] { parseHamiltonian("1.0 Z\n2.0 ZZ\n"); });
    EXPECT_EQ(lengths.line, 2u);
    EXPECT_EQ(lengths.cause, ErrorCode::InvalidHamiltonian);
    EXPECT_EQ(parseFailure([] { parseHamiltonian("abc Z\n"); }).line, 1u);
    EXPECT_EQ(parseFailure([] { parseHamiltonian("# nothing\n"); }).cause, ErrorCode::InvalidHamiltonian);
}

TEST(Formats, read_missing_file) {
    try {
        readTextFile("/nonexistent/qlin/file.txt");
        FAIL() << "expected an error";
    } catch (const QuantumError &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
}
