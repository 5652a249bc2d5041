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
 * Effectful quantum programs over an abstract device.
 *
 * Qubit is a move-only handle naming one live qubit of the device. Every
 * device operation takes its handles by value and hands back fresh ones, so a
 * handle can be used exactly once; copying a handle does not compile. Moving
 * from a handle leaves it empty, and the Session rejects empty or stale
 * handles at run time with UseAfterConsume.
 *
 * A Program<A> is a deferred computation that, when executed against a
 * backend, performs device operations in order and yields a value of type A.
 * Programs are built from the primitives below with bind()/map()/pure(), or
 * directly from a callable taking Session&. Side effects only happen inside
 * execute(), which also checks that every allocated qubit was measured.
 */

#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qlin/circuit.hpp"
#include "qlin/error.hpp"

namespace qlin {

/// Backend-local name of a physical qubit. Never exposed through Qubit.
using QubitId = std::uint64_t;

class Session;
struct QubitInspector;

class Qubit {
  public:
    Qubit(Qubit &&other) noexcept : id_(std::exchange(other.id_, kEmpty)) {}
    Qubit &operator=(Qubit &&other) noexcept {
        id_ = std::exchange(other.id_, kEmpty);
        return *this;
    }
    Qubit(const Qubit &) = delete;
    Qubit &operator=(const Qubit &) = delete;
    ~Qubit() = default;

  private:
    friend class Session;
    friend struct QubitInspector;

    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
    explicit Qubit(std::uint64_t id) : id_(id) {}

    std::uint64_t id_;
};

using Qubits = std::vector<Qubit>;

/// Builds a Qubits vector from handles (std::initializer_list would need copies).
template <class... Q>
    requires(std::same_as<std::remove_cvref_t<Q>, Qubit> && ...)
Qubits makeQubits(Q &&...qubits) {
    Qubits out;
    out.reserve(sizeof...(Q));
    (out.push_back(std::forward<Q>(qubits)), ...);
    return out;
}

struct Unit {
    bool operator==(const Unit &) const = default;
};

/// The operations a concrete device must provide. Backends work purely in
/// terms of their own QubitIds; handle bookkeeping lives in Session.
class DeviceBackend {
  public:
    virtual ~DeviceBackend() = default;

    virtual std::string name() const = 0;
    /// Returns the device to the zero-qubit state. Called at the start of every execute.
    virtual void reset() = 0;
    /// Adds `count` qubits in |0> and returns their ids, in order.
    virtual std::vector<QubitId> allocate(std::size_t count) = 0;
    /// Applies `gate` with the gate's wire k acting on qubits[k].
    virtual void applyGate(const GateApp &gate, std::span<const QubitId> qubits) = 0;
    /// Measures and removes one qubit.
    virtual bool measure(QubitId qubit) = 0;
    virtual std::size_t liveQubits() const = 0;

  private:
    friend class Session;
    bool busy_ = false;
};

/// Optional record of one execute, for tests and diagnostics.
struct ExecutionReport {
    std::vector<std::string> trace;
    std::vector<std::uint64_t> issued;
    std::vector<std::uint64_t> consumed;
};

template <class A>
class Program;

template <class A>
A execute(DeviceBackend &backend, Program<A> program, ExecutionReport *report = nullptr);

/// One execution context on a backend. Only execute() creates sessions.
class Session {
  public:
    Session(const Session &) = delete;
    Session &operator=(const Session &) = delete;
    ~Session();

    Qubits newQubits(std::size_t count);
    Qubit newQubit();
    Qubits applyCircuit(Qubits qubits, const Circuit &circuit);
    Qubit applyH(Qubit q);
    Qubit applyP(double angle, Qubit q);
    std::pair<Qubit, Qubit> applyCNOT(Qubit control, Qubit target);
    /// Bit k is the outcome for qubits[k]. The qubits are destroyed.
    std::vector<bool> measure(Qubits qubits);
    bool measureQubit(Qubit q);

    std::size_t liveHandles() const noexcept { return live_.size(); }

  private:
    template <class A>
    friend A execute(DeviceBackend &backend, Program<A> program, ExecutionReport *report);

    Session(DeviceBackend &backend, ExecutionReport *report);

    std::vector<QubitId> consume(std::span<Qubit> qubits);
    Qubit issue(QubitId physical);
    void applyGateTo(const GateApp &gate, std::span<const QubitId> physical);
    void finish();
    void record(std::string event);

    DeviceBackend &backend_;
    ExecutionReport *report_;
    std::unordered_map<std::uint64_t, QubitId> live_;
    std::uint64_t nextHandle_ = 0;
};

template <class A>
class Program {
    // A proxy into a vector<bool> would dangle once the vector is gone.
    static_assert(!std::is_same_v<A, std::vector<bool>::reference>,
                  "program result is a vector<bool> proxy; return bool explicitly");

  public:
    using value_type = A;

    template <class F>
        requires std::invocable<F &, Session &> && std::convertible_to<std::invoke_result_t<F &, Session &>, A>
    explicit Program(F step) : node_(std::make_unique<Node<F>>(std::move(step))) {}

    Program(Program &&) noexcept = default;
    Program &operator=(Program &&) noexcept = default;

    /// Runs the program once. A program is consumed by running it.
    A run(Session &session) && {
        if (!node_) {
            throw QuantumError(ErrorCode::ProgramConsumed, "program has already been run or moved from");
        }
        auto node = std::move(node_);
        return node->run(session);
    }

    /// Sequencing: runs this program, feeds its result to `next`, runs the program `next` returns.
    template <class F>
    auto bind(F next) && {
        using Next = std::invoke_result_t<F, A>;
        using B = typename Next::value_type;
        return Program<B>([self = std::move(*this), next = std::move(next)](Session &s) mutable -> B {
            A a = std::move(self).run(s);
            return std::invoke(std::move(next), std::move(a)).run(s);
        });
    }

    template <class F>
    auto map(F f) && {
        using B = std::invoke_result_t<F, A>;
        return Program<B>([self = std::move(*this), f = std::move(f)](Session &s) mutable -> B {
            return std::invoke(std::move(f), std::move(self).run(s));
        });
    }

  private:
    struct NodeBase {
        virtual ~NodeBase() = default;
        virtual A run(Session &session) = 0;
    };
    template <class F>
    struct Node final : NodeBase {
        explicit Node(F f) : step(std::move(f)) {}
        A run(Session &session) override { return step(session); }
        F step;
    };

    std::unique_ptr<NodeBase> node_;
};

template <class A>
Program<std::decay_t<A>> pure(A &&value) {
    using V = std::decay_t<A>;
    return Program<V>([v = V(std::forward<A>(value))](Session &) mutable -> V { return std::move(v); });
}

Program<Qubits> newQubits(std::size_t count);
Program<Qubit> newQubit();
Program<Qubits> applyCircuit(Qubits qubits, Circuit circuit);
Program<Qubit> applyH(Qubit q);
Program<Qubit> applyP(double angle, Qubit q);
Program<std::pair<Qubit, Qubit>> applyCNOT(Qubit control, Qubit target);
Program<std::vector<bool>> measure(Qubits qubits);
Program<bool> measureQubit(Qubit q);

/// Runs `program` from the zero-qubit state. Throws DanglingQubits if any
/// allocated qubit is still live afterwards, and ReentrantExecute if the
/// backend is already inside an execute.
template <class A>
A execute(DeviceBackend &backend, Program<A> program, ExecutionReport *report) {
    Session session(backend, report);
    A result = std::move(program).run(session);
    session.finish();
    return result;
}

}  // namespace qlin
