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

#ifndef CS832_CODES_H
#define CS832_CODES_H

#include <string>
#include <vector>

#include "cs832/gates.h"
#include "cs832/pauli.h"

namespace cs832 {

constexpr size_t BLOCK_QUBITS = 8;

enum class CodeVersion : uint8_t { V1 = 1, V2 = 2 };

enum class GaugeFix : uint8_t {
    /// Gauge qubits in |+>; gauge X operators become stabilizers.
    PLUS,
    /// Gauge qubits in |0>; gauge Z operators become stabilizers.
    ZERO,
};

enum class SwitchDirection : uint8_t { V1_TO_V2, V2_TO_V1 };

struct NamedPauli {
    std::string name;
    PauliString op;
};

/// Stabilizers, logical pairs and gauge pairs of one code.
///
/// Index j of logical_x/logical_z is logical qubit j+1. Index i of
/// gauge_x/gauge_z is gauge qubit i+4.
struct CodeDefinition {
    std::string name;
    size_t n = BLOCK_QUBITS;
    std::vector<PauliString> stabilizers;
    std::vector<PauliString> logical_x;
    std::vector<PauliString> logical_z;
    std::vector<PauliString> gauge_x;
    std::vector<PauliString> gauge_z;
    std::vector<NamedPauli> complementary_checks;

    /// Checks every commutation relation and throws std::logic_error with
    /// the first violation.
    void validate() const;
    /// Minimum weight of a Pauli that commutes with every stabilizer and acts
    /// nontrivially on a logical or is not a stabilizer (brute force).
    size_t distance() const;
    /// Name = Pauli lines, readable back with PauliString::from_str.
    std::string catalog() const;
};

/// The [[8,6,2]] code with the noncanonical logical basis whose last three
/// logical qubits become the gauge qubits.
CodeDefinition parent_code();

/// The [[8,3,3,2]] subsystem code.
CodeDefinition subsystem_code();

/// Fixes the gauge qubits of the subsystem code and reduces the logical
/// representatives modulo the new stabilizers to minimum weight.
///
/// A subsystem logical that already has minimum weight is kept as is. For
/// the others, ties between minimum-weight representatives are broken by
/// an anchor qubit shared by every reduced logical of that type. The anchor follows the
/// family's standard basis X_j X_{n-2}, Z_j Z_{n-1}: qubit n-2 for X type
/// and n-1 for Z type when that qubit appears in some minimum-weight
/// candidate of every logical, otherwise the lowest such qubit. Remaining
/// ties are lexicographic.
CodeDefinition derive_version(GaugeFix fix);

CodeDefinition code_for(CodeVersion version);

/// A low-weight operator whose product with the listed partner gauge
/// operators equals a weight-8 stabilizer.
struct ComplementaryCheck {
    PauliString op;
    std::vector<PauliString> partners;
    PauliString stabilizer;
};

/// The complementary check of a switching direction: X0X1X2X4 (partners
/// G^X_4, G^X_5, G^X_6) for 2->1 and Z4Z5Z6Z7 (partner G^Z_4) for 1->2.
/// The product identity is asserted.
ComplementaryCheck complementary_check(SwitchDirection direction);

/// Complement of a single gauge operator, the weight-8 stabilizer of the
/// same type times the operator.
ComplementaryCheck complement_of(const PauliString &gauge);

/// How a logical gate is realized physically.
enum class Realization : uint8_t {
    /// A list of physical gates.
    GATES,
    /// A relabeling of the physical qubits.
    PERMUTATION,
    /// Two qubit rotations replaced by fault-tolerant gadgets, followed by a
    /// Pauli byproduct.
    GADGETS,
};

/// One gadget rotation, XX or ZZ on (data, shared).
struct GadgetCall {
    GateKind rotation;
    size_t data;
    size_t shared;
};

struct LogicalGateSpec {
    std::string name;
    CodeVersion version;
    Realization realization;
    /// Physical gates in time order (GATES).
    std::vector<Gate> gates;
    /// perm[q] is where the state of qubit q moves (PERMUTATION).
    std::vector<size_t> permutation;
    /// Gadget rotations in time order and the byproduct applied before them
    /// (GADGETS).
    std::vector<GadgetCall> gadgets;
    PauliString byproduct;

    /// Physical gates in time order. Gadget rotations appear as bare XX/ZZ
    /// gates and permutations expand into SWAP networks.
    std::vector<Gate> physical_gates() const;
    /// Heisenberg image g * p * g^dagger of a block Pauli.
    PauliString conjugate_pauli(const PauliString &p) const;
};

/// Logical gates available in a code version.
std::vector<LogicalGateSpec> logical_gate_table(CodeVersion version);

/// Looks up a gate by name in logical_gate_table; throws if missing.
LogicalGateSpec find_logical_gate(CodeVersion version, const std::string &name);

/// SWAP gates realizing a qubit permutation, perm[q] being the destination
/// of qubit q.
std::vector<Gate> permutation_to_swaps(const std::vector<size_t> &perm);

/// Applies a permutation to a Pauli: the letter on q moves to perm[q].
PauliString permute_pauli(const PauliString &p, const std::vector<size_t> &perm);

/// Whether a transversal CNOT from a `control` block to a `target` block
/// keeps both blocks in their codespaces. Decided by conjugating the joint
/// stabilizer group.
bool interblock_direction_allowed(CodeVersion control, CodeVersion target);

/// The joint stabilizer group of two blocks, block 1 on qubits 0..7 and
/// block 2 on qubits 8..15.
std::vector<PauliString> joint_stabilizers(const CodeDefinition &b1, const CodeDefinition &b2);

/// Joint logical operators: block 1 logicals then block 2 logicals.
std::vector<PauliString> joint_logicals_x(const CodeDefinition &b1, const CodeDefinition &b2);
std::vector<PauliString> joint_logicals_z(const CodeDefinition &b1, const CodeDefinition &b2);

std::string version_name(CodeVersion version);

}  // namespace cs832

#endif
