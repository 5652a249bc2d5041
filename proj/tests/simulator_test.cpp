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

#include "qlin/simulator.hpp"

#include <map>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "qlin/std_circuits.hpp"

using namespace qlin;
using oracle::Matrix;
using oracle::Vector;

namespace {

constexpr double kTol = 1e-9;

Vector toVector(const QuantumState &s) {
    Vector v(static_cast<Eigen::Index>(s.amplitudes().size()));
    for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s.amplitudes()[i];
    }
    return v;
}

/// Drives a state through a circuit on wires 0..n-1.
void run(QuantumState &s, const Circuit &c) {
    for (const GateApp &g : c.gates()) {
        s.applyGate(g);
    }
}

/// Prepares an arbitrary normalised state by running a random circuit on fresh wires.
QuantumState randomState(std::mt19937_64 &rng, std::size_t n, Vector *out) {
    QuantumState s;
    s.extendWithZeros(n);
    Circuit prep = oracle::randomCircuit(rng, n, 25);
    run(s, prep);
    *out = oracle::circuitMatrix(prep) * oracle::basis(0, std::size_t{1} << n);
    return s;
}

Program<std::vector<bool>> runAndMeasure(Circuit c) {
    const std::size_t n = c.arity();
    return newQubits(n)
        .bind([c = std::move(c)](Qubits qs) { return applyCircuit(std::move(qs), c); })
        .bind([](Qubits qs) { return measure(std::move(qs)); });
}

}  // namespace

TEST(QuantumState, extend_with_zeros) {
    QuantumState s;
    EXPECT_EQ(s.qubitCount(), 0u);
    EXPECT_TRUE(s.extendWithZeros(0).empty());
    ASSERT_EQ(s.amplitudes().size(), 1u);
    auto ids = s.extendWithZeros(2);
    EXPECT_EQ(ids.size(), 2u);
    EXPECT_NE(ids[0], ids[1]);
    ASSERT_EQ(s.amplitudes().size(), 4u);
    EXPECT_EQ(s.amplitudes()[0], Amplitude(1.0));
    for (std::size_t i = 1; i < 4; ++i) {
        EXPECT_EQ(s.amplitudes()[i], Amplitude(0.0));
    }
}

TEST(QuantumState, extend_bell_state) {
    QuantumState s;
    s.extendWithZeros(2);
    run(s, toBellBasis());
    s.extendWithZeros(1);
    Vector bell(4);
    const double r = 1.0 / std::sqrt(2.0);
    bell << r, 0, 0, r;
    Vector expected = oracle::kron(bell, oracle::basis(0, 2));
    EXPECT_LE((toVector(s) - expected).cwiseAbs().maxCoeff(), kTol);
    EXPECT_GT(std::abs(s.amplitudes()[0]), 0.5);
    EXPECT_GT(std::abs(s.amplitudes()[6]), 0.5);
}

TEST(QuantumState, gate_examples) {
    const double r = 1.0 / std::sqrt(2.0);
    QuantumState s;
    s.extendWithZeros(1);
    s.applyGate(Hadamard{0});
    EXPECT_NEAR(std::abs(s.amplitudes()[0] - r), 0.0, kTol);
    EXPECT_NEAR(std::abs(s.amplitudes()[1] - r), 0.0, kTol);
    s.applyGate(Phase{std::numbers::pi, 0});
    EXPECT_NEAR(std::abs(s.amplitudes()[1] + r), 0.0, kTol);

    QuantumState t;
    t.extendWithZeros(2);
    run(t, addH(addP(addH(identity(2), 0), std::numbers::pi, 0), 0));  // X on wire 0: |10>
    EXPECT_NEAR(std::abs(t.amplitudes()[2] - 1.0), 0.0, kTol);
    t.applyGate(ControlledNot{0, 1});
    EXPECT_NEAR(std::abs(t.amplitudes()[3] - 1.0), 0.0, kTol);
}

TEST(QuantumState, measure_examples) {
    QuantumState zero;
    auto ids = zero.extendWithZeros(1);
    EXPECT_FALSE(zero.measureWire(ids[0], 0.999));
    EXPECT_EQ(zero.qubitCount(), 0u);
    ASSERT_EQ(zero.amplitudes().size(), 1u);
    EXPECT_NEAR(std::abs(zero.amplitudes()[0] - 1.0), 0.0, kTol);

    QuantumState bell;
    auto b = bell.extendWithZeros(2);
    run(bell, toBellBasis());
    EXPECT_FALSE(bell.measureWire(b[0], 0.9));
    ASSERT_EQ(bell.amplitudes().size(), 2u);
    EXPECT_NEAR(std::abs(bell.amplitudes()[0] - 1.0), 0.0, kTol);
    EXPECT_NEAR(std::abs(bell.amplitudes()[1]), 0.0, kTol);
    EXPECT_EQ(bell.wireOf(b[1]), 0u);
    EXPECT_FALSE(bell.contains(b[0]));

    QuantumState plus;
    auto p = plus.extendWithZeros(1);
    plus.applyGate(Hadamard{0});
    EXPECT_TRUE(plus.measureWire(p[0], 0.3));  // p1 = 0.5, rule u < p1.
}

TEST(QuantumState, measure_middle_wire_reindexes) {
    std::mt19937_64 rng(31);
    Vector psi;
    QuantumState s;
    auto ids = s.extendWithZeros(3);
    Circuit prep = oracle::randomCircuit(rng, 3, 20);
    run(s, prep);
    psi = oracle::circuitMatrix(prep) * oracle::basis(0, 8);

    const double p1 = (oracle::onWire(oracle::proj1(), 1, 3) * psi).squaredNorm();
    const bool bit = s.measureWire(ids[1], 0.5);
    EXPECT_EQ(bit, 0.5 < p1);
    // Oracle: project, drop wire 1, renormalise.
    Vector expected(4);
    for (std::size_t hi = 0; hi < 2; ++hi) {
        for (std::size_t lo = 0; lo < 2; ++lo) {
            const std::size_t full = (hi << 2) | (static_cast<std::size_t>(bit) << 1) | lo;
            expected(static_cast<Eigen::Index>((hi << 1) | lo)) = psi(static_cast<Eigen::Index>(full));
        }
    }
    expected /= expected.norm();
    EXPECT_LE((toVector(s) - expected).cwiseAbs().maxCoeff(), kTol);
    EXPECT_EQ(s.wireOf(ids[0]), 0u);
    EXPECT_EQ(s.wireOf(ids[2]), 1u);
    EXPECT_NEAR(s.norm(), 1.0, kTol);
}

TEST(QuantumState, gates_match_matrix_oracle_on_random_states) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        Vector psi;
        QuantumState s = randomState(rng, n, &psi);
        Circuit c = oracle::randomCircuit(rng, n, 12);
        run(s, c);
        Vector expected = matrixOf(c) * psi;
        EXPECT_LE((toVector(s) - expected).cwiseAbs().maxCoeff(), kTol);
        EXPECT_NEAR(s.norm(), 1.0, kTol);
    }
}

TEST(QuantumState, json_dump) {
    QuantumState s;
    s.extendWithZeros(1);
    EXPECT_EQ(s.toJson(), "[[1.0,0.0],[0.0,0.0]]");
}

TEST(Simulator, basis_measurement_ignores_seed) {
    Circuit x = addH(addP(addH(identity(2), 1), std::numbers::pi, 1), 1);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SimulatorBackend sim(seed);
        auto bits = execute(sim, runAndMeasure(x));
        EXPECT_FALSE(bits[0]);
        EXPECT_TRUE(bits[1]);
    }
}

TEST(Simulator, deterministic_under_seed) {
    auto sample = [](std::uint64_t seed) {
        SimulatorBackend sim(seed);
        std::vector<bool> all;
        for (int i = 0; i < 200; ++i) {
            auto bits = execute(sim, runAndMeasure(qft(3)));
            all.insert(all.end(), bits.begin(), bits.end());
        }
        return all;
    };
    EXPECT_EQ(sample(99), sample(99));
    EXPECT_NE(sample(99), sample(100));
}

TEST(Simulator, capacity_limit) {
    SimulatorBackend sim(1, 3);
    EXPECT_EQ(sim.capacity(), 3u);
    try {
        execute(sim, newQubits(4).bind([](Qubits qs) { return measure(std::move(qs)); }));
        FAIL() << "expected CapacityExceeded";
    } catch (const QuantumError &e) {
        EXPECT_EQ(e.code(), ErrorCode::CapacityExceeded);
    }
    EXPECT_EQ(SimulatorBackend(1).capacity(), 24u);
}

TEST(Simulator, two_qubit_statistics_match_born_rule) {
    std::mt19937_64 rng(33);
    const int shots = 20000;
    for (int trial = 0; trial < 5; ++trial) {
        Circuit c = oracle::randomCircuit(rng, 2, 10);
        Vector psi = oracle::circuitMatrix(c) * oracle::basis(0, 4);
        SimulatorBackend sim(1000 + static_cast<std::uint64_t>(trial));
        std::map<std::size_t, int> counts;
        for (int i = 0; i < shots; ++i) {
            auto bits = execute(sim, runAndMeasure(c));
            counts[(static_cast<std::size_t>(bits[0]) << 1) | static_cast<std::size_t>(bits[1])]++;
        }
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(counts[k] / static_cast<double>(shots), std::norm(psi(static_cast<Eigen::Index>(k))), 0.02);
        }
    }
}

TEST(Random, uniform_range_and_streams) {
    RandomSource r(5);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
    RandomSource a = RandomSource::derived(5, 0);
    RandomSource b = RandomSource::derived(5, 1);
    RandomSource c = RandomSource::derived(5, 0);
    const auto wa = a.nextWord();
    EXPECT_NE(wa, b.nextWord());
    EXPECT_EQ(wa, c.nextWord());
}
