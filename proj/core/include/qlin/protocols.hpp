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

#pragma once

#include <cstddef>
#include <optional>

#include "qlin/circuit.hpp"
#include "qlin/device.hpp"

namespace qlin {

/// new qubit, H, measure.
Program<bool> coinProgram();
bool coin(DeviceBackend &backend);

struct RusOptions {
    /// Total rounds allowed before RusIterationLimit; unlimited when empty.
    std::optional<std::size_t> maxIterations;
};

struct RusRun {
    Qubit qubit;
    std::size_t failures = 0;
};

/// Repeat-until-success on `q`: allocate an ancilla, apply uPrime to
/// (ancilla, q), measure the ancilla; on 1 undo `e` on q and retry, on 0 stop.
Program<RusRun> rusCounted(Qubit q, Circuit uPrime, Circuit e, RusOptions options = {});
Program<Qubit> rus(Qubit q, Circuit uPrime, Circuit e, RusOptions options = {});

/// H T CNOT H CNOT T H on wire 0 / (0,1): the two-qubit circuit used to demonstrate RUS.
Circuit exampleUPrime();

struct RusOutcome {
    bool bit;
    std::size_t failures;
};

/// Runs RUS on a fresh |0> qubit and measures the result.
RusOutcome runRus(DeviceBackend &backend, const Circuit &uPrime, const Circuit &e, RusOptions options = {});

}  // namespace qlin
