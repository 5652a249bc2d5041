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

#include "qlin/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include <Eigen/Sparse>

#include "qlin/error.hpp"

namespace qlin {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void checkWire(std::size_t wire, std::size_t arity) {
    if (wire >= arity) {
        throw QuantumError(ErrorCode::WireOutOfRange,
                           "wire " + std::to_string(wire) + " out of range for arity " + std::to_string(arity));
    }
}

GateApp remap(const GateApp &gate, auto &&wireMap) {
    return std::visit(
        Overloaded{
            [&](const Hadamard &g) -> GateApp { return Hadamard{wireMap(g.wire)}; },
            [&](const Phase &g) -> GateApp { return Phase{g.angle, wireMap(g.wire)}; },
            [&](const ControlledNot &g) -> GateApp {
                return ControlledNot{wireMap(g.control), wireMap(g.target)};
            },
        },
        gate);
}

bool isZeroPhase(double angle) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    return std::abs(std::remainder(angle, kTwoPi)) <= 1e-12;
}

bool touches(const GateApp &gate, std::size_t wire) {
    return std::visit(Overloaded{
                          [&](const Hadamard &g) { return g.wire == wire; },
                          [&](const Phase &g) { return g.wire == wire; },
                          [&](const ControlledNot &g) { return g.control == wire || g.target == wire; },
                      },
                      gate);
}

bool sharesWire(const GateApp &a, const GateApp &b) {
    for (std::size_t w : wiresOf(a)) {
        if (touches(b, w)) {
            return true;
        }
    }
    return false;
}

// One left-to-right sweep of the peephole rules. Returns true if anything changed.
bool peepholePass(std::vector<GateApp> &gates) {
    bool changed = false;
    std::size_t i = 0;
    while (i < gates.size()) {
        if (const auto *p = std::get_if<Phase>(&gates[i]); p != nullptr && isZeroPhase(p->angle)) {
            gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            continue;
        }
        std::optional<std::size_t> next;
        for (std::size_t j = i + 1; j < gates.size(); ++j) {
            if (sharesWire(gates[i], gates[j])) {
                next = j;
                break;
            }
        }
        if (!next) {
            ++i;
            continue;
        }
        const GateApp &a = gates[i];
        const GateApp &b = gates[*next];
        const bool cancels = (std::holds_alternative<Hadamard>(a) && a == b) ||
                             (std::holds_alternative<ControlledNot>(a) && a == b);
        if (cancels) {
            gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(*next));
            gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            continue;
        }
        const auto *pa = std::get_if<Phase>(&a);
        const auto *pb = std::get_if<Phase>(&b);
        if (pa != nullptr && pb != nullptr) {
            gates[i] = Phase{pa->angle + pb->angle, pa->wire};
            gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(*next));
            changed = true;
            continue;
        }
        ++i;
    }
    return changed;
}

using SparseUnitary = Eigen::SparseMatrix<std::complex<double>, Eigen::RowMajor>;

// Full 2^n x 2^n operator of a single gate, built entry by entry.
SparseUnitary embedding(const GateApp &gate, std::size_t arity) {
    const std::size_t dim = std::size_t{1} << arity;
    auto bitOf = [arity](std::size_t wire) { return std::size_t{1} << (arity - 1 - wire); };
    std::vector<Eigen::Triplet<std::complex<double>>> entries;
    entries.reserve(2 * dim);
    std::visit(Overloaded{
                   [&](const Hadamard &g) {
                       const double s = 1.0 / std::numbers::sqrt2;
                       const std::size_t bit = bitOf(g.wire);
                       for (std::size_t row = 0; row < dim; ++row) {
                           const bool one = (row & bit) != 0;
                           entries.emplace_back(row, row & ~bit, s);
                           entries.emplace_back(row, row | bit, one ? -s : s);
                       }
                   },
                   [&](const Phase &g) {
                       const std::size_t bit = bitOf(g.wire);
                       const std::complex<double> phase = std::polar(1.0, g.angle);
                       for (std::size_t row = 0; row < dim; ++row) {
                           entries.emplace_back(row, row, (row & bit) != 0 ? phase : 1.0);
                       }
                   },
                   [&](const ControlledNot &g) {
                       const std::size_t cbit = bitOf(g.control);
                       const std::size_t tbit = bitOf(g.target);
                       for (std::size_t row = 0; row < dim; ++row) {
                           entries.emplace_back(row, (row & cbit) != 0 ? row ^ tbit : row, 1.0);
                       }
                   },
               },
               gate);
    SparseUnitary m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    m.setFromTriplets(entries.begin(), entries.end());
    return m;
}

}  // namespace

std::vector<std::size_t> wiresOf(const GateApp &gate) {
    return std::visit(Overloaded{
                          [](const Hadamard &g) { return std::vector<std::size_t>{g.wire}; },
                          [](const Phase &g) { return std::vector<std::size_t>{g.wire}; },
                          [](const ControlledNot &g) { return std::vector<std::size_t>{g.control, g.target}; },
                      },
                      gate);
}

void Circuit::append(const GateApp &gate) {
    for (std::size_t w : wiresOf(gate)) {
        checkWire(w, arity_);
    }
    if (const auto *cx = std::get_if<ControlledNot>(&gate); cx != nullptr && cx->control == cx->target) {
        throw QuantumError(ErrorCode::ControlEqualsTarget,
                           "CNOT control and target are both wire " + std::to_string(cx->control));
    }
    gates_.push_back(gate);
}

Circuit identity(std::size_t arity) { return Circuit(arity); }

Circuit addH(Circuit c, std::size_t wire) {
    c.append(Hadamard{wire});
    return c;
}

Circuit addP(Circuit c, double angle, std::size_t wire) {
    c.append(Phase{angle, wire});
    return c;
}

Circuit addCNOT(Circuit c, std::size_t control, std::size_t target) {
    c.append(ControlledNot{control, target});
    return c;
}

Circuit compose(const Circuit &a, const Circuit &b) {
    if (a.arity() != b.arity()) {
        throw QuantumError(ErrorCode::ArityMismatch, "compose of arity " + std::to_string(a.arity()) +
                                                         " with arity " + std::to_string(b.arity()));
    }
    Circuit out = b;
    for (const GateApp &g : a.gates()) {
        out.append(g);
    }
    return out;
}

Circuit tensor(const Circuit &a, const Circuit &b) {
    Circuit out(a.arity() + b.arity());
    for (const GateApp &g : a.gates()) {
        out.append(g);
    }
    const std::size_t offset = a.arity();
    for (const GateApp &g : b.gates()) {
        out.append(remap(g, [offset](std::size_t w) { return w + offset; }));
    }
    return out;
}

Circuit apply(const Circuit &small, const Circuit &big, std::span<const std::size_t> wires) {
    if (wires.size() != small.arity()) {
        throw QuantumError(ErrorCode::ArityMismatch, "apply needs " + std::to_string(small.arity()) +
                                                         " wires, got " + std::to_string(wires.size()));
    }
    for (std::size_t k = 0; k < wires.size(); ++k) {
        checkWire(wires[k], big.arity());
        for (std::size_t l = 0; l < k; ++l) {
            if (wires[l] == wires[k]) {
                throw QuantumError(ErrorCode::DuplicateWire,
                                   "wire " + std::to_string(wires[k]) + " listed twice in apply");
            }
        }
    }
    Circuit out = big;
    for (const GateApp &g : small.gates()) {
        out.append(remap(g, [wires](std::size_t w) { return wires[w]; }));
    }
    return out;
}

Circuit apply(const Circuit &small, const Circuit &big, std::initializer_list<std::size_t> wires) {
    return apply(small, big, std::span<const std::size_t>(wires.begin(), wires.size()));
}

Circuit adjoint(const Circuit &c) {
    Circuit out(c.arity());
    auto gates = c.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (const auto *p = std::get_if<Phase>(&*it)) {
            out.append(Phase{-p->angle, p->wire});
        } else {
            out.append(*it);
        }
    }
    return out;
}

Circuit controlled(const Circuit &c) {
    using std::numbers::pi;
    Circuit out(c.arity() + 1);
    constexpr std::size_t ctl = 0;
    for (const GateApp &gate : c.gates()) {
        std::visit(Overloaded{
                       [&](const Hadamard &g) {
                           // CH = S H T CX T^dag H S^dag on the target.
                           const std::size_t t = g.wire + 1;
                           out.append(Phase{pi / 2, t});
                           out.append(Hadamard{t});
                           out.append(Phase{pi / 4, t});
                           out.append(ControlledNot{ctl, t});
                           out.append(Phase{-pi / 4, t});
                           out.append(Hadamard{t});
                           out.append(Phase{-pi / 2, t});
                       },
                       [&](const Phase &g) {
                           const std::size_t t = g.wire + 1;
                           out.append(Phase{g.angle / 2, ctl});
                           out.append(ControlledNot{ctl, t});
                           out.append(Phase{-g.angle / 2, t});
                           out.append(ControlledNot{ctl, t});
                           out.append(Phase{g.angle / 2, t});
                       },
                       [&](const ControlledNot &g) {
                           // Toffoli with controls (ctl, b) and target t: 6 CNOTs plus T layers.
                           const std::size_t a = ctl;
                           const std::size_t b = g.control + 1;
                           const std::size_t t = g.target + 1;
                           out.append(Hadamard{t});
                           out.append(ControlledNot{b, t});
                           out.append(Phase{-pi / 4, t});
                           out.append(ControlledNot{a, t});
                           out.append(Phase{pi / 4, t});
                           out.append(ControlledNot{b, t});
                           out.append(Phase{-pi / 4, t});
                           out.append(ControlledNot{a, t});
                           out.append(Phase{pi / 4, b});
                           out.append(Phase{pi / 4, t});
                           out.append(Hadamard{t});
                           out.append(ControlledNot{a, b});
                           out.append(Phase{pi / 4, a});
                           out.append(Phase{-pi / 4, b});
                           out.append(ControlledNot{a, b});
                       },
                   },
                   gate);
    }
    return out;
}

Circuit optimise(const Circuit &c) {
    std::vector<GateApp> gates(c.gates().begin(), c.gates().end());
    while (peepholePass(gates)) {
    }
    Circuit out(c.arity());
    for (const GateApp &g : gates) {
        out.append(g);
    }
    return out;
}

std::size_t depth(const Circuit &c) {
    std::vector<std::size_t> level(c.arity(), 0);
    std::size_t deepest = 0;
    for (const GateApp &g : c.gates()) {
        const auto wires = wiresOf(g);
        std::size_t step = 0;
        for (std::size_t w : wires) {
            step = std::max(step, level[w]);
        }
        ++step;
        for (std::size_t w : wires) {
            level[w] = step;
        }
        deepest = std::max(deepest, step);
    }
    return deepest;
}

GateCounts gateCounts(const Circuit &c) {
    GateCounts counts;
    for (const GateApp &g : c.gates()) {
        std::visit(Overloaded{
                       [&](const Hadamard &) { ++counts.hadamard; },
                       [&](const Phase &) { ++counts.phase; },
                       [&](const ControlledNot &) { ++counts.cnot; },
                   },
                   g);
    }
    return counts;
}

UnitaryMatrix matrixOf(const Circuit &c) {
    if (c.arity() > kMaxMatrixArity) {
        throw QuantumError(ErrorCode::ArityTooLarge, "matrixOf supports at most " + std::to_string(kMaxMatrixArity) +
                                                         " wires, circuit has " + std::to_string(c.arity()));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.arity());
    UnitaryMatrix m = UnitaryMatrix::Identity(dim, dim);
    UnitaryMatrix next(dim, dim);
    for (const GateApp &g : c.gates()) {
        next.noalias() = embedding(g, c.arity()) * m;
        m.swap(next);
    }
    return m;
}

}  // namespace qlin
