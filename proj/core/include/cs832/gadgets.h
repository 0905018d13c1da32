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

#ifndef CS832_GADGETS_H
#define CS832_GADGETS_H

#include <string>
#include <vector>

#include "cs832/gates.h"
#include "cs832/pauli.h"

namespace cs832 {

/// State of the two gadget ancillas.
enum class AncillaState : uint8_t {
    /// (|00> + |11>)/sqrt2, stabilized by XX and ZZ.
    BELL,
    /// |++>, stabilized by XI and IX.
    PLUS_PLUS,
};

std::string ancilla_state_name(AncillaState s);

/// The ancilla stabilizers on local qubits (d1, d2, a1, a2).
std::vector<PauliString> ancilla_stabilizers(AncillaState s);

/// An ancilla-assisted XX or ZZ rotation gadget on local qubits
/// 0 = d1, 1 = d2, 2 = a1, 3 = a2.
///
/// Noiselessly, recovery * gates maps data (x) input to
/// rotation(d1, d2) data (x) output up to a global phase.
struct GadgetVariant {
    GateKind rotation;
    AncillaState input;
    std::vector<Gate> gates;
    PauliString recovery;

    AncillaState output() const;
    std::string name() const;
};

/// The gadget used by the circuit builders for a rotation and ancilla input.
GadgetVariant gadget_variant(GateKind rotation, AncillaState input);

/// The reference Pauli recovery on (d1, d2, a1, a2) for a rotation and
/// ancilla input.
PauliString table_recovery(GateKind rotation, AncillaState input);

/// True iff the two recoveries agree up to phase modulo the ancilla
/// stabilizers of `output`.
bool recoveries_equivalent(const PauliString &a, const PauliString &b, AncillaState output);

/// Parses "CX(0,2) ZZ(1,2) ..." into gates on the four local qubits.
std::vector<Gate> parse_gadget_gates(const std::string &text);

}  // namespace cs832

#endif
