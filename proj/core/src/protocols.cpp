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

#include "qlin/protocols.hpp"

#include <numbers>

#include "qlin/error.hpp"

namespace qlin {

Program<bool> coinProgram() {
    return newQubit().bind([](Qubit q) { return applyH(std::move(q)); }).bind([](Qubit q) {
        return measureQubit(std::move(q));
    });
}

bool coin(DeviceBackend &backend) { return execute(backend, coinProgram()); }

namespace {

Program<RusRun> rusRound(Qubit q, Circuit uPrime, Circuit e, RusOptions options, std::size_t failures) {
    return newQubit().bind([q = std::move(q), uPrime = std::move(uPrime), e = std::move(e), options,
                            failures](Qubit ancilla) mutable {
        Qubits pair = makeQubits(std::move(ancilla), std::move(q));
        return applyCircuit(std::move(pair), uPrime)
            .bind([uPrime = std::move(uPrime), e = std::move(e), options, failures](Qubits qs) mutable {
                Program<bool> flag = measureQubit(std::move(qs[0]));
                return std::move(flag).bind([target = std::move(qs[1]), uPrime = std::move(uPrime),
                                             e = std::move(e), options, failures](bool failed) mutable
                                            -> Program<RusRun> {
                    if (!failed) {
                        return pure(RusRun{std::move(target), failures});
                    }
                    if (options.maxIterations && failures + 1 >= *options.maxIterations) {
                        throw QuantumError(ErrorCode::RusIterationLimit,
                                           "repeat-until-success gave up after " +
                                               std::to_string(failures + 1) + " round(s)");
                    }
                    Circuit undo = adjoint(e);
                    return applyCircuit(makeQubits(std::move(target)), std::move(undo))
                        .bind([uPrime = std::move(uPrime), e = std::move(e), options,
                               failures](Qubits back) mutable {
                            return rusRound(std::move(back[0]), std::move(uPrime), std::move(e), options,
                                            failures + 1);
                        });
                });
            });
    });
}

}  // namespace

Program<RusRun> rusCounted(Qubit q, Circuit uPrime, Circuit e, RusOptions options) {
    if (uPrime.arity() != 2 || e.arity() != 1) {
        throw QuantumError(ErrorCode::ArityMismatch, "RUS needs a 2-wire uPrime and a 1-wire correction");
    }
    return rusRound(std::move(q), std::move(uPrime), std::move(e), options, 0);
}

Program<Qubit> rus(Qubit q, Circuit uPrime, Circuit e, RusOptions options) {
    return rusCounted(std::move(q), std::move(uPrime), std::move(e), options).map([](RusRun run) {
        return std::move(run.qubit);
    });
}

Circuit exampleUPrime() {
    constexpr double t = std::numbers::pi / 4;
    Circuit c(2);
    c.append(Hadamard{0});
    c.append(Phase{t, 0});
    c.append(ControlledNot{0, 1});
    c.append(Hadamard{0});
    c.append(ControlledNot{0, 1});
    c.append(Phase{t, 0});
    c.append(Hadamard{0});
    return c;
}

RusOutcome runRus(DeviceBackend &backend, const Circuit &uPrime, const Circuit &e, RusOptions options) {
    return execute(backend, newQubit().bind([uPrime, e, options](Qubit q) {
        return rusCounted(std::move(q), uPrime, e, options).bind([](RusRun run) {
            const std::size_t failures = run.failures;
            return measureQubit(std::move(run.qubit)).map([failures](bool bit) {
                return RusOutcome{bit, failures};
            });
        });
    }));
}

}  // namespace qlin
