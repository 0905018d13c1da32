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

#ifndef CS832_BUILDERS_H
#define CS832_BUILDERS_H

#include <optional>
#include <string>
#include <vector>

#include "cs832/circuit.h"
#include "cs832/codes.h"
#include "cs832/gadgets.h"

namespace cs832 {

/// Block layout shared by every block-level builder: data qubits
/// 0..8*blocks-1, then two ancillas and one flag.
Circuit block_circuit(size_t blocks = 1);
size_t block_ancilla(const Circuit &c, size_t k);
size_t block_flag(const Circuit &c);

enum class LogicalState : uint8_t { ZERO_ZERO_ZERO, PLUS_PLUS_PLUS, PLUS_PLUS_ZERO, ZERO_ZERO_PLUS };

/// "000", "+++", "++0" or "00+".
std::string logical_state_label(LogicalState s);
LogicalState parse_logical_state(const std::string &label);

/// GHZ state on n data qubits (hub qubit 0). The dual variant starts the
/// hub in |0> and the others in |+> with every CNOT inverted. The fault
/// tolerant variant couples a verification ancilla to the hub before and
/// after the fan-out and discards on a -1 readout.
Circuit build_ghz(size_t n, bool dual, bool fault_tolerant);

/// One of the eight logical state preparations, in the block layout.
Circuit build_state_prep(CodeVersion version, LogicalState state);

/// Measures a pure X or pure Z Pauli `op` on the circuit's qubits using
/// ancilla `anc` and, when given, flag `flag`.
///
/// Z type: ancilla |0>, CNOT data->ancilla in ascending qubit order, Z
/// readout. X type: ancilla |+>, CNOT ancilla->data, X readout. The flag
/// couples after the first and before the last data coupling (|+> control
/// for Z type, |0> target for X type) and is read out as `label`_flag with
/// a DISCARD_IF.
void append_pauli_measurement(Circuit &c, const PauliString &op, size_t anc, std::optional<size_t> flag,
                              const std::string &label);

/// Standalone measurement of a block operator in the block layout.
/// Throws for operators that are not pure X or pure Z or have weight < 2.
Circuit build_gauge_measurement(const PauliString &op, bool flagged, const std::string &label = "m");

/// The switching protocol in the block layout. Outcomes are labelled g4,
/// g5, g6 (gauge), c7 (complementary check) and s8 (weight 8 stabilizer).
///
/// V1_TO_V2 measures G^Z_4..6, Z4Z5Z6Z7 and Z^8, all flagged; discards
/// when g4*c7 or s8 is -1 and applies G^X_i for every g_i = -1.
/// V2_TO_V1 measures G^X_4..6 unflagged, then X0X1X2X4 and X^8 flagged;
/// discards when g4*g5*g6*c7 or s8 is -1 and applies G^Z_i.
/// `flagged = false` strips every flag (negative control).
Circuit build_switch(SwitchDirection direction, bool flagged = true);

/// One round of verification of every stabilizer generator of `version`,
/// in the block layout. Operators of weight >= 4 are measured with a flag.
/// Outcomes are labelled `prefix`s0, `prefix`s1, ... and any -1 discards.
Circuit build_stabilizer_round(CodeVersion version, const std::string &prefix = "r");

/// Appends the gadget gates on (d1, d2, a1, a2) followed by its recovery.
void append_gadget(Circuit &c, const GadgetVariant &v, size_t d1, size_t d2, size_t a1, size_t a2);

/// Prepares the ancilla input state on (a1, a2).
void append_ancilla_input(Circuit &c, AncillaState s, size_t a1, size_t a2);

/// Verifies the ancilla state on (a1, a2) destructively: X readouts for
/// |++>, a Bell basis readout for a Bell pair. Discards on any -1.
void append_ancilla_check(Circuit &c, AncillaState s, size_t a1, size_t a2, const std::string &label);

/// A single gadget on data pair (d1, d2) of a block: ancilla input
/// preparation, gadget, recovery and output verification.
Circuit build_rotation_gadget(const GadgetVariant &v, size_t d1, size_t d2);

/// Version 1 logical Hadamard on logical qubit j (1..3): byproduct
/// Y_q X_6 Z_0, then ZZ(q,0) with a Bell input, XX(q,6) with a |++> input
/// and ZZ(q,0) with a Bell input, sharing one ancilla pair, then an X check
/// of both ancillas.
Circuit build_logical_hadamard(size_t j, const GadgetVariant &zz, const GadgetVariant &xx);
Circuit build_logical_hadamard(size_t j);

/// Any gate of logical_gate_table in the block layout. Permutations become
/// SWAP gates that are noiseless unless `expand_permutations` is set.
Circuit build_logical_gate(CodeVersion version, const std::string &name, bool expand_permutations = false);

enum class InterblockKind : uint8_t { PARALLEL_CNOT, FIG3, SMALLEST, ALT, CZ };

std::string interblock_kind_name(InterblockKind k);
InterblockKind parse_interblock_kind(const std::string &name);

/// Qubit pairing (a_k, b_perm[k]) whose transversal CZ acts as CZ on every
/// logical pair (i, i) of two Version 2 blocks.
std::vector<size_t> interblock_cz_pairing();

/// Inter-block constructions on two blocks (block 1 on qubits 0..7, block 2
/// on 8..15). Logical indices are 1..3; `i` is on block 1 and `j` on
/// block 2.
///   PARALLEL_CNOT: transversal CNOT (every pair (k,k)).
///   SMALLEST: T, CNOT(i->j) on block 1, T, CNOT(i->j) on block 1.
///   ALT: the same with the in-block CNOT(i->j) on block 2.
///   FIG3: SMALLEST onto an auxiliary target k, wrapped in SWAP(k,j) on
///         block 2 (no SWAPs when i != j).
///   CZ: SMALLEST with the transversal layers replaced by parallel CZ.
/// Throws when the direction is forbidden or a needed in-block gate does
/// not exist in that block's version.
Circuit build_interblock(InterblockKind kind, CodeVersion b1, CodeVersion b2, size_t i, size_t j,
                         bool expand_permutations = false);

/// Grover search for the marked set {101, 011}. The bare circuit acts on
/// three qubits and reads b0 b1 b2. The encoded circuit runs in the block
/// layout and reads data qubits d0..d7. It verifies the stabilizers after
/// the state preparation, before CCZ and before the readout: the
/// transversal T layer and the Z basis readout can both turn a detectable
/// but not yet detected error into a logical one.
Circuit build_grover(bool encoded);

/// Decoded output bits "b1b2b3" of a Grover run, or nullopt when the
/// encoded readout violates a Z type stabilizer of Version 2.
std::optional<std::string> decode_grover(const MeasurementRecord &record, bool encoded);

}  // namespace cs832

#endif
