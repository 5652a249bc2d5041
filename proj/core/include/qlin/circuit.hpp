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
 * Algebraic representation of unitary circuits over the gate set {H, P(a), CNOT}.
 *
 * A Circuit is an arity plus an ordered list of gate applications; the empty
 * list is the identity. Gates are appended in time order, so the first gate in
 * the list acts first on the input state.
 *
 * Basis convention: wire 0 is the most significant bit of a basis-state index,
 * so on two wires |10> has index 2.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace qlin {

struct Hadamard {
    std::size_t wire;
    bool operator==(const Hadamard &) const = default;
};

/// diag(1, e^{i angle}) on one wire. Angle is in radians.
struct Phase {
    double angle;
    std::size_t wire;
    bool operator==(const Phase &) const = default;
};

struct ControlledNot {
    std::size_t control;
    std::size_t target;
    bool operator==(const ControlledNot &) const = default;
};

using GateApp = std::variant<Hadamard, Phase, ControlledNot>;

/// Wires touched by a gate, in (control, target) order for CNOT.
std::vector<std::size_t> wiresOf(const GateApp &gate);

using UnitaryMatrix = Eigen::MatrixXcd;

/// Largest arity matrixOf() will expand into a dense matrix.
inline constexpr std::size_t kMaxMatrixArity = 12;

class Circuit {
  public:
    explicit Circuit(std::size_t arity = 0) : arity_(arity) {}

    std::size_t arity() const noexcept { return arity_; }
    std::span<const GateApp> gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    /// Appends a gate after validating it against this circuit's arity.
    /// Throws QuantumError (WireOutOfRange, ControlEqualsTarget).
    void append(const GateApp &gate);

    bool operator==(const Circuit &) const = default;

  private:
    std::size_t arity_;
    std::vector<GateApp> gates_;
};

Circuit identity(std::size_t arity);
Circuit addH(Circuit c, std::size_t wire);
Circuit addP(Circuit c, double angle, std::size_t wire);
Circuit addCNOT(Circuit c, std::size_t control, std::size_t target);

/// Sequential composition: `b` acts first, then `a` (matrixOf = A * B).
Circuit compose(const Circuit &a, const Circuit &b);

/// Parallel composition: `a` occupies the low-numbered wires, `b` the rest.
Circuit tensor(const Circuit &a, const Circuit &b);

/// Appends `small` to `big`, routing small's k-th wire onto big's wires[k].
/// Throws ArityMismatch, WireOutOfRange, or DuplicateWire.
Circuit apply(const Circuit &small, const Circuit &big, std::span<const std::size_t> wires);
Circuit apply(const Circuit &small, const Circuit &big, std::initializer_list<std::size_t> wires);

/// Inverse circuit: reversed gate order, each phase negated.
Circuit adjoint(const Circuit &c);

/// Controlled version with the new control on wire 0; original wires shift up by one.
/// The decomposition is exact (no stray global phase on the controlled block).
Circuit controlled(const Circuit &c);

/// Peephole rewriting to fixpoint: H·H and CNOT·CNOT cancellation, phase merging,
/// and removal of zero phases. Never increases the gate count.
Circuit optimise(const Circuit &c);

struct GateCounts {
    std::size_t hadamard = 0;
    std::size_t phase = 0;
    std::size_t cnot = 0;

    std::size_t total() const noexcept { return hadamard + phase + cnot; }
    bool operator==(const GateCounts &) const = default;
};

/// Length of the longest dependency chain; each gate takes one step on every wire it touches.
std::size_t depth(const Circuit &c);
GateCounts gateCounts(const Circuit &c);

/// Dense reference semantics. Throws ArityTooLarge above kMaxMatrixArity.
UnitaryMatrix matrixOf(const Circuit &c);

/// ASCII drawing, one row per wire, one column per gate in time order.
std::string draw(const Circuit &c);

/// OpenQASM 2.0 text (h, u1, cx on register q). Angles use 15 significant digits.
std::string exportQasm(const Circuit &c);

/// Native text form: `qubits <n>` followed by `H j`, `P a j`, `CNOT c t` lines.
/// Angles are written in shortest round-trip form.
std::string toNativeText(const Circuit &c);

}  // namespace qlin
