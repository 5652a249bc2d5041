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

#include "qlin/circuit.hpp"

namespace qlin {

Circuit hGate();
Circuit pGate(double angle);
Circuit cnotGate();
/// P(pi/4).
Circuit tGate();

/// H on wire 0 followed by CNOT(0, 1); maps |00> to the Bell state.
Circuit toBellBasis();

/// Phase gate P(2*pi / 2^m).
Circuit rm(std::size_t m);
/// controlled(rm(m)); control on wire 0, target on wire 1.
Circuit cRm(std::size_t m);

/// H on wire 0 followed by controlled R_k gates (control wire k-1, target wire 0) for k = 2..n.
Circuit qftRec(std::size_t n);

/// Quantum Fourier transform without the terminal swap layer: the output
/// register is bit-reversed relative to the textbook DFT.
Circuit qft(std::size_t n);

}  // namespace qlin
