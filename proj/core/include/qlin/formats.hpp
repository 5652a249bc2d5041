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

/**
 * @file
 * Text formats read by the command-line tool. All parsers throw ParseError
 * carrying the 1-based line number; gate-constraint violations are wrapped
 * with their original ErrorCode as the cause.
 *
 * Native circuit:   qubits <n> / H <j> / P <angle> <j> / CNOT <c> <t>
 * Graph:            vertices <n> / edge <u> <v>
 * Hamiltonian:      <coefficient> <pauli string>, e.g. `0.5 ZZ`
 *
 * `#` starts a comment in all three. Angles accept arithmetic over numbers
 * and `pi` (e.g. `pi/4`, `-2*pi/3`).
 */

#pragma once

#include <string>
#include <string_view>

#include "qlin/circuit.hpp"
#include "qlin/maxcut.hpp"
#include "qlin/pauli.hpp"

namespace qlin {

Circuit parseCircuitText(std::string_view text);

/// OpenQASM 2.0 subset: one qreg; h, x, z, s, sdg, t, tdg, u1, p, cx.
Circuit parseQasm(std::string_view text);

/// Dispatches on an `OPENQASM` header, otherwise native.
Circuit parseCircuitAny(std::string_view text);

Graph parseGraph(std::string_view text);
Hamiltonian parseHamiltonian(std::string_view text);

/// Evaluates an angle expression such as `3*pi/4`. Throws ParseError (line 0 unless rethrown).
double parseAngle(std::string_view expr);

/// Reads a whole file; throws QuantumError(InvalidArgument) if it cannot be opened.
std::string readTextFile(const std::string &path);

}  // namespace qlin
