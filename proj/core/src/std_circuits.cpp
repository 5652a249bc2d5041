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

#include "qlin/std_circuits.hpp"

#include <cmath>
#include <numbers>

namespace qlin {

Circuit hGate() { return addH(identity(1), 0); }

Circuit pGate(double angle) { return addP(identity(1), angle, 0); }

Circuit cnotGate() { return addCNOT(identity(2), 0, 1); }

Circuit tGate() { return pGate(std::numbers::pi / 4); }

Circuit toBellBasis() { return compose(cnotGate(), tensor(hGate(), identity(1))); }

Circuit rm(std::size_t m) { return pGate(2 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(m))); }

Circuit cRm(std::size_t m) { return controlled(rm(m)); }

Circuit qftRec(std::size_t n) {
    if (n == 0) {
        return identity(0);
    }
    if (n == 1) {
        return hGate();
    }
    // The rotation coupling wire n-1 back onto wire 0 is R_n.
    const Circuit rest = tensor(qftRec(n - 1), identity(1));
    return apply(cRm(n), rest, {n - 1, 0});
}

Circuit qft(std::size_t n) {
    if (n == 0) {
        return identity(0);
    }
    return compose(tensor(identity(1), qft(n - 1)), qftRec(n));
}

}  // namespace qlin
