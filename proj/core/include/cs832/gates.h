// Copyright 2026 The cs832 Authors
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

#ifndef CS832_GATES_H
#define CS832_GATES_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cs832/pauli.h"

namespace cs832 {

/// Gate kinds. The two qubit rotations follow the conventions
///   XX = (I + iXX)/sqrt2, YY = (I - iYY)/sqrt2, ZZ = (I - iZZ)/sqrt2,
///   R_X = (I - iX)/sqrt2,
/// so XX carries the opposite sign from the others. SQRT_X_DAG is the
/// inverse of sqrt(X) = ((1+i) I + (1-i) X)/2.
enum class GateKind : uint8_t {
    H,
    S,
    S_DAG,
    SQRT_X_DAG,
    R_X,
    X,
    Y,
    Z,
    CNOT,
    CZ,
    SWAP,
    XX,
    YY,
    ZZ,
    T,
    T_DAG,
    CCZ,
};

constexpr size_t NUM_GATE_KINDS = static_cast<size_t>(GateKind::CCZ) + 1;

/// A gate kind applied to 1, 2 or 3 qubits. For CNOT the first target is
/// the control.
struct Gate {
    GateKind kind = GateKind::H;
    std::array<uint8_t, 3> targets{};

    Gate() = default;
    Gate(GateKind k, size_t q0);
    Gate(GateKind k, size_t q0, size_t q1);
    Gate(GateKind k, size_t q0, size_t q1, size_t q2);

    size_t arity() const;
    std::vector<size_t> qubits() const;
    uint64_t support_mask() const;
    bool operator==(const Gate &other) const;
    std::string str() const;
};

size_t gate_arity(GateKind kind);
bool is_clifford(GateKind kind);
std::string_view gate_name(GateKind kind);
/// Accepts the canonical names plus common aliases ("CX", "SDG", ...).
GateKind gate_kind_from_name(std::string_view name);
/// Every gate kind, in enum order.
const std::vector<GateKind> &all_gate_kinds();

/// Returns g * p * g^dagger with an exact phase. Throws std::invalid_argument
/// for non-Clifford kinds and for targets outside p's range.
PauliString conjugate(const Gate &g, const PauliString &p);

/// Applies conjugation in place; same contract as conjugate().
void conjugate_in_place(const Gate &g, PauliString &p);

/// Applies the inverse gate's conjugation, g^dagger * p * g.
PauliString conjugate_inverse(const Gate &g, const PauliString &p);

}  // namespace cs832

#endif
