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

#include "qlin/device.hpp"

#include <cstdio>
#include <unordered_set>

namespace qlin {

namespace {

std::string describe(const GateApp &gate, std::span<const QubitId> physical) {
    if (const auto *h = std::get_if<Hadamard>(&gate)) {
        return "h p" + std::to_string(physical[h->wire]);
    }
    if (const auto *p = std::get_if<Phase>(&gate)) {
        char angle[32];
        std::snprintf(angle, sizeof(angle), "%.17g", p->angle);
        return std::string("p(") + angle + ") p" + std::to_string(physical[p->wire]);
    }
    const auto &cx = std::get<ControlledNot>(gate);
    return "cx p" + std::to_string(physical[cx.control]) + ",p" + std::to_string(physical[cx.target]);
}

}  // namespace

Session::Session(DeviceBackend &backend, ExecutionReport *report) : backend_(backend), report_(report) {
    if (backend_.busy_) {
        throw QuantumError(ErrorCode::ReentrantExecute, "execute called while backend '" + backend_.name() +
                                                            "' is already running a program");
    }
    backend_.busy_ = true;
    backend_.reset();
}

Session::~Session() { backend_.busy_ = false; }

void Session::record(std::string event) {
    if (report_ != nullptr) {
        report_->trace.push_back(std::move(event));
    }
}

std::vector<QubitId> Session::consume(std::span<Qubit> qubits) {
    std::unordered_set<std::uint64_t> seen;
    for (const Qubit &q : qubits) {
        if (q.id_ == Qubit::kEmpty || !live_.contains(q.id_)) {
            throw QuantumError(ErrorCode::UseAfterConsume, "qubit handle was already consumed");
        }
        if (!seen.insert(q.id_).second) {
            throw QuantumError(ErrorCode::DuplicateHandle, "the same qubit handle was passed twice");
        }
    }
    std::vector<QubitId> physical;
    physical.reserve(qubits.size());
    for (Qubit &q : qubits) {
        auto it = live_.find(q.id_);
        physical.push_back(it->second);
        if (report_ != nullptr) {
            report_->consumed.push_back(q.id_);
        }
        live_.erase(it);
        q.id_ = Qubit::kEmpty;
    }
    return physical;
}

Qubit Session::issue(QubitId physical) {
    const std::uint64_t id = nextHandle_++;
    live_.emplace(id, physical);
    if (report_ != nullptr) {
        report_->issued.push_back(id);
    }
    return Qubit(id);
}

void Session::applyGateTo(const GateApp &gate, std::span<const QubitId> physical) {
    backend_.applyGate(gate, physical);
    if (report_ != nullptr) {
        record(describe(gate, physical));
    }
}

void Session::finish() {
    if (!live_.empty() || backend_.liveQubits() != 0) {
        throw QuantumError(ErrorCode::DanglingQubits, std::to_string(live_.size()) +
                                                          " qubit(s) still live at the end of execute");
    }
}

Qubits Session::newQubits(std::size_t count) {
    const std::vector<QubitId> physical = backend_.allocate(count);
    record("new " + std::to_string(count));
    Qubits out;
    out.reserve(physical.size());
    for (QubitId p : physical) {
        out.push_back(issue(p));
    }
    return out;
}

Qubit Session::newQubit() {
    Qubits qs = newQubits(1);
    return std::move(qs.front());
}

Qubits Session::applyCircuit(Qubits qubits, const Circuit &circuit) {
    if (qubits.size() != circuit.arity()) {
        throw QuantumError(ErrorCode::ArityMismatch, "circuit of arity " + std::to_string(circuit.arity()) +
                                                         " applied to " + std::to_string(qubits.size()) +
                                                         " qubit(s)");
    }
    const std::vector<QubitId> physical = consume(qubits);
    for (const GateApp &gate : circuit.gates()) {
        applyGateTo(gate, physical);
    }
    Qubits out;
    out.reserve(physical.size());
    for (QubitId p : physical) {
        out.push_back(issue(p));
    }
    return out;
}

Qubit Session::applyH(Qubit q) {
    const std::vector<QubitId> physical = consume(std::span<Qubit>(&q, 1));
    applyGateTo(Hadamard{0}, physical);
    return issue(physical[0]);
}

Qubit Session::applyP(double angle, Qubit q) {
    const std::vector<QubitId> physical = consume(std::span<Qubit>(&q, 1));
    applyGateTo(Phase{angle, 0}, physical);
    return issue(physical[0]);
}

std::pair<Qubit, Qubit> Session::applyCNOT(Qubit control, Qubit target) {
    Qubits both = makeQubits(std::move(control), std::move(target));
    const std::vector<QubitId> physical = consume(both);
    applyGateTo(ControlledNot{0, 1}, physical);
    Qubit c = issue(physical[0]);
    Qubit t = issue(physical[1]);
    return {std::move(c), std::move(t)};
}

std::vector<bool> Session::measure(Qubits qubits) {
    const std::vector<QubitId> physical = consume(qubits);
    std::vector<bool> bits;
    bits.reserve(physical.size());
    for (QubitId p : physical) {
        const bool bit = backend_.measure(p);
        bits.push_back(bit);
        record("measure p" + std::to_string(p) + " -> " + (bit ? "1" : "0"));
    }
    return bits;
}

bool Session::measureQubit(Qubit q) { return measure(makeQubits(std::move(q))).front(); }

Program<Qubits> newQubits(std::size_t count) {
    return Program<Qubits>([count](Session &s) { return s.newQubits(count); });
}

Program<Qubit> newQubit() {
    return Program<Qubit>([](Session &s) { return s.newQubit(); });
}

Program<Qubits> applyCircuit(Qubits qubits, Circuit circuit) {
    return Program<Qubits>([qs = std::move(qubits), c = std::move(circuit)](Session &s) mutable {
        return s.applyCircuit(std::move(qs), c);
    });
}

Program<Qubit> applyH(Qubit q) {
    return Program<Qubit>([q = std::move(q)](Session &s) mutable { return s.applyH(std::move(q)); });
}

Program<Qubit> applyP(double angle, Qubit q) {
    return Program<Qubit>([angle, q = std::move(q)](Session &s) mutable { return s.applyP(angle, std::move(q)); });
}

Program<std::pair<Qubit, Qubit>> applyCNOT(Qubit control, Qubit target) {
    return Program<std::pair<Qubit, Qubit>>([c = std::move(control), t = std::move(target)](Session &s) mutable {
        return s.applyCNOT(std::move(c), std::move(t));
    });
}

Program<std::vector<bool>> measure(Qubits qubits) {
    return Program<std::vector<bool>>([qs = std::move(qubits)](Session &s) mutable { return s.measure(std::move(qs)); });
}

Program<bool> measureQubit(Qubit q) {
    return Program<bool>([q = std::move(q)](Session &s) mutable { return s.measureQubit(std::move(q)); });
}

}  // namespace qlin
