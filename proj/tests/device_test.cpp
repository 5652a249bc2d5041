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

#include <algorithm>
#include <random>
#include <set>
#include <type_traits>

#include "gtest/gtest.h"

#include "linearity_programs.hpp"
#include "qlin/simulator.hpp"
#include "qlin/std_circuits.hpp"
#include "qlin/testing.hpp"

using namespace qlin;

static_assert(!std::is_copy_constructible_v<Qubit>);
static_assert(!std::is_copy_assignable_v<Qubit>);
static_assert(std::is_nothrow_move_constructible_v<Qubit>);
static_assert(!std::is_copy_constructible_v<Program<int>>);

namespace {

template <class F>
ErrorCode codeOf(F &&f) {
    try {
        f();
    } catch (const QuantumError &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected a QuantumError";
    return ErrorCode::InvalidArgument;
}

std::vector<std::string> traceOf(Program<bool> p, std::uint64_t seed = 1) {
    SimulatorBackend sim(seed);
    ExecutionReport report;
    execute(sim, std::move(p), &report);
    return report.trace;
}

Program<bool> coinFrom(Qubit q) {
    return applyH(std::move(q)).bind([](Qubit h) { return measureQubit(std::move(h)); });
}

}  // namespace

TEST(Device, pure_program) {
    SimulatorBackend sim(1);
    EXPECT_TRUE(execute(sim, pure(true)));
    EXPECT_EQ(execute(sim, pure(41).map([](int x) { return x + 1; })), 42);
}

TEST(Device, new_qubits) {
    SimulatorBackend sim(1);
    auto zero = newQubits(0).map([](Qubits qs) { return qs.size(); });
    EXPECT_EQ(execute(sim, std::move(zero)), 0u);

    for (int i = 0; i < 50; ++i) {
        auto p = newQubit().bind([](Qubit q) { return measureQubit(std::move(q)); });
        EXPECT_FALSE(execute(sim, std::move(p)));
    }

    auto ids = newQubits(2).bind([](Qubits qs) {
        auto a = *QubitInspector::id(qs[0]);
        auto b = *QubitInspector::id(qs[1]);
        return measure(std::move(qs)).map([a, b](std::vector<bool>) { return a != b; });
    });
    EXPECT_TRUE(execute(sim, std::move(ids)));
}

TEST(Device, bell_pair_only_correlated) {
    SimulatorBackend sim(7);
    for (int i = 0; i < 500; ++i) {
        auto p = newQubits(2)
                     .bind([](Qubits qs) { return applyCircuit(std::move(qs), toBellBasis()); })
                     .bind([](Qubits qs) { return measure(std::move(qs)); });
        auto bits = execute(sim, std::move(p));
        EXPECT_EQ(bits[0], bits[1]);
    }
}

TEST(Device, apply_circuit_errors) {
    SimulatorBackend sim(1);
    EXPECT_EQ(codeOf([&] {
                  execute(sim, newQubits(1).bind([](Qubits qs) { return applyCircuit(std::move(qs), cnotGate()); })
                                   .bind([](Qubits qs) { return measure(std::move(qs)); }));
              }),
              ErrorCode::ArityMismatch);

    EXPECT_EQ(codeOf([&] {
                  execute(sim, Program<Unit>([](Session &s) {
                              Qubit q = s.newQubit();
                              Qubits twice = makeQubits(QubitInspector::forge(*QubitInspector::id(q)), std::move(q));
                              s.measure(s.applyCircuit(std::move(twice), cnotGate()));
                              return Unit{};
                          }));
              }),
              ErrorCode::DuplicateHandle);
}

TEST(Device, apply_cnot_same_handle) {
    SimulatorBackend sim(1);
    EXPECT_EQ(codeOf([&] {
                  execute(sim, Program<Unit>([](Session &s) {
                              Qubit q = s.newQubit();
                              Qubit alias = QubitInspector::forge(*QubitInspector::id(q));
                              auto [a, b] = s.applyCNOT(std::move(q), std::move(alias));
                              s.measure(makeQubits(std::move(a), std::move(b)));
                              return Unit{};
                          }));
              }),
              ErrorCode::DuplicateHandle);
}

TEST(Device, use_after_consume) {
    SimulatorBackend sim(1);
    // Moved-from handle.
    EXPECT_EQ(codeOf([&] {
                  execute(sim, Program<Unit>([](Session &s) {
                              Qubit q = s.newQubit();
                              Qubit h = s.applyH(std::move(q));
                              s.measureQubit(std::move(h));
                              s.measureQubit(std::move(q));  // NOLINT(bugprone-use-after-move)
                              return Unit{};
                          }));
              }),
              ErrorCode::UseAfterConsume);
    // Stale id forged from a consumed handle, reached through a dynamic path.
    EXPECT_EQ(codeOf([&] {
                  execute(sim, Program<Unit>([](Session &s) {
                              Qubit q = s.newQubit();
                              const auto stale = *QubitInspector::id(q);
                              Qubit h = s.applyH(std::move(q));
                              s.applyH(QubitInspector::forge(stale));
                              s.measureQubit(std::move(h));
                              return Unit{};
                          }));
              }),
              ErrorCode::UseAfterConsume);
}

TEST(Device, dangling_qubits) {
    SimulatorBackend sim(1);
    EXPECT_EQ(codeOf([&] { execute(sim, newQubit()); }), ErrorCode::DanglingQubits);
    EXPECT_EQ(codeOf([&] {
                  execute(sim, newQubits(2).bind([](Qubits qs) {
                      Qubit keep = std::move(qs[1]);
                      return measureQubit(std::move(qs[0])).map([k = std::move(keep)](bool b) { return b; });
                  }));
              }),
              ErrorCode::DanglingQubits);
    // The backend recovers after a failed run.
    EXPECT_TRUE(execute(sim, pure(true)));
}

TEST(Device, reentrant_execute_rejected) {
    SimulatorBackend sim(1);
    EXPECT_EQ(codeOf([&] {
                  execute(sim, Program<bool>([&sim](Session &) { return execute(sim, pure(true)); }));
              }),
              ErrorCode::ReentrantExecute);
    // A second backend may be driven from inside a program.
    SimulatorBackend other(2);
    EXPECT_TRUE(execute(sim, Program<bool>([&other](Session &) { return execute(other, pure(true)); })));
}

TEST(Device, program_runs_once) {
    SimulatorBackend sim(1);
    auto p = pure(3);
    Program<int> moved = std::move(p);
    EXPECT_EQ(execute(sim, std::move(moved)), 3);
    EXPECT_EQ(codeOf([&] { execute(sim, std::move(p)); }), ErrorCode::ProgramConsumed);  // NOLINT
}

TEST(Device, special_cases_match_apply_circuit_trace) {
    auto viaH = traceOf(newQubit().bind([](Qubit q) { return coinFrom(std::move(q)); }));
    auto viaCircuit = traceOf(newQubits(1)
                                  .bind([](Qubits qs) { return applyCircuit(std::move(qs), hGate()); })
                                  .bind([](Qubits qs) { return measureQubit(std::move(qs[0])); }));
    EXPECT_EQ(viaH, viaCircuit);

    auto viaP = traceOf(newQubit()
                            .bind([](Qubit q) { return applyP(0.5, std::move(q)); })
                            .bind([](Qubit q) { return measureQubit(std::move(q)); }));
    auto viaPCircuit = traceOf(newQubits(1)
                                   .bind([](Qubits qs) { return applyCircuit(std::move(qs), pGate(0.5)); })
                                   .bind([](Qubits qs) { return measureQubit(std::move(qs[0])); }));
    EXPECT_EQ(viaP, viaPCircuit);

    auto viaCx = traceOf(newQubits(2)
                             .bind([](Qubits qs) { return applyCNOT(std::move(qs[0]), std::move(qs[1])); })
                             .bind([](std::pair<Qubit, Qubit> p) {
                                 return measure(makeQubits(std::move(p.first), std::move(p.second)));
                             })
                             .map([](std::vector<bool> b) -> bool { return b[0]; }));
    auto viaCxCircuit = traceOf(newQubits(2)
                                    .bind([](Qubits qs) { return applyCircuit(std::move(qs), cnotGate()); })
                                    .bind([](Qubits qs) { return measure(std::move(qs)); })
                                    .map([](std::vector<bool> b) -> bool { return b[0]; }));
    EXPECT_EQ(viaCx, viaCxCircuit);
}

TEST(Device, apply_p_zero_leaves_state) {
    SimulatorBackend sim(3);
    int ones = 0;
    const int shots = 4000;
    for (int i = 0; i < shots; ++i) {
        auto p = newQubit()
                     .bind([](Qubit q) { return applyH(std::move(q)); })
                     .bind([](Qubit q) { return applyP(0.0, std::move(q)); })
                     .bind([](Qubit q) { return applyH(std::move(q)); })
                     .bind([](Qubit q) { return measureQubit(std::move(q)); });
        ones += execute(sim, std::move(p)) ? 1 : 0;
    }
    EXPECT_EQ(ones, 0);  // H P(0) H = I on |0>.
}

TEST(Device, measure_bit_order_follows_handles) {
    SimulatorBackend sim(5);
    // X on the second qubit only: bit 1 must be set regardless of allocation order.
    Circuit x = addH(addP(addH(identity(1), 0), std::numbers::pi, 0), 0);
    auto p = newQubits(2).bind([x](Qubits qs) {
        return applyCircuit(makeQubits(std::move(qs[1])), x).bind([q0 = std::move(qs[0])](Qubits one) mutable {
            return measure(makeQubits(std::move(one[0]), std::move(q0)));
        });
    });
    auto bits = execute(sim, std::move(p));
    EXPECT_TRUE(bits[0]);
    EXPECT_FALSE(bits[1]);
}

TEST(DeviceLaws, left_identity) {
    auto f = [](int angleTenths) {
        return newQubit()
            .bind([angleTenths](Qubit q) { return applyP(angleTenths / 10.0, std::move(q)); })
            .bind([](Qubit q) { return coinFrom(std::move(q)); });
    };
    auto lhs = traceOf(pure(7).bind(f));
    auto rhs = traceOf(f(7));
    EXPECT_EQ(lhs, rhs);
}

TEST(DeviceLaws, right_identity) {
    auto make = [] { return newQubit().bind([](Qubit q) { return coinFrom(std::move(q)); }); };
    auto lhs = traceOf(make().bind([](bool b) { return pure(b); }));
    auto rhs = traceOf(make());
    EXPECT_EQ(lhs, rhs);
}

TEST(DeviceLaws, associativity) {
    auto f = [](Qubits qs) { return applyCircuit(std::move(qs), toBellBasis()); };
    auto g = [](Qubits qs) {
        return measure(std::move(qs)).map([](std::vector<bool> b) { return b[0] != b[1]; });
    };
    auto lhs = traceOf(newQubits(2).bind(f).bind(g), 9);
    auto rhs = traceOf(newQubits(2).bind([f, g](Qubits qs) { return f(std::move(qs)).bind(g); }), 9);
    EXPECT_EQ(lhs, rhs);
    EXPECT_FALSE(lhs.empty());
}

TEST(DeviceProperties, issued_equals_consumed_and_fresh) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        SimulatorBackend sim(static_cast<std::uint64_t>(trial));
        ExecutionReport report;
        execute(sim, testprog::randomValidProgram(rng()), &report);
        std::multiset<std::uint64_t> issued(report.issued.begin(), report.issued.end());
        std::multiset<std::uint64_t> consumed(report.consumed.begin(), report.consumed.end());
        EXPECT_EQ(issued, consumed);
        std::set<std::uint64_t> unique(report.issued.begin(), report.issued.end());
        EXPECT_EQ(unique.size(), report.issued.size());
        EXPECT_TRUE(std::is_sorted(report.issued.begin(), report.issued.end()));
    }
}

TEST(DeviceProperties, violations_always_rejected) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const auto kind = static_cast<testprog::Violation>(trial % 4);
        SimulatorBackend sim(static_cast<std::uint64_t>(trial));
        EXPECT_EQ(codeOf([&] { execute(sim, testprog::randomViolatingProgram(rng(), kind)); }),
                  testprog::expectedError(kind))
            << "trial " << trial;
    }
}

TEST(DeviceProperties, no_false_positives) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        SimulatorBackend sim(static_cast<std::uint64_t>(trial));
        EXPECT_NO_THROW(execute(sim, testprog::randomValidProgram(rng())));
    }
}
