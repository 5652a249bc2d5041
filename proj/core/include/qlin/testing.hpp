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

// Privileged access to handle internals. For tests only: production code must
// never read or forge handle ids.

#pragma once

#include <cstdint>
#include <optional>

#include "qlin/device.hpp"

namespace qlin {

struct QubitInspector {
    static std::optional<std::uint64_t> id(const Qubit &q) {
        if (q.id_ == Qubit::kEmpty) {
            return std::nullopt;
        }
        return q.id_;
    }

    static Qubit forge(std::uint64_t id) { return Qubit(id); }
};

}  // namespace qlin
