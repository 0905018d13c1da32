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

#ifndef CS832_PROTOCOL_H
#define CS832_PROTOCOL_H

#include <string>
#include <vector>

#include "cs832/builders.h"
#include "cs832/circuit.h"
#include "cs832/codes.h"
#include "cs832/statevec.h"
#include "cs832/tableau.h"

namespace cs832 {

/// Expected final state of a circuit: every listed operator, sign included,
/// should measure +1.
struct Reference {
    std::string name;
    std::vector<PauliString> stabilizers;
    std::vector<PauliString> logicals;

    /// The reference after the Clifford gates `gates` act on the state.
    Reference conjugated(const std::vector<Gate> &gates) const;
    /// The reference after a Pauli acts on the state.
    Reference with_pauli(const PauliString &p) const;
    /// The same reference on a wider register, block qubit q mapped to
    /// offset + q.
    Reference embedded(size_t num_qubits, size_t offset = 0) const;
};

/// Reference for a code state. `pattern` holds one character per logical
/// qubit: '0' (+Z), '1' (-Z), '+' (+X) or '-' (-X).
Reference code_reference(const CodeDefinition &code, const std::string &pattern, size_t num_qubits,
                         size_t offset = 0);

/// Reference of a state preparation in the block layout.
Reference prep_reference(CodeVersion version, LogicalState state);

enum class ShotClass : uint8_t { SUCCESS, DISCARD, FAILURE };

std::string shot_class_name(ShotClass c);

/// Discard when a DISCARD_IF fired or a reference stabilizer reads -1;
/// otherwise failure when a reference logical reads -1, else success.
/// Throws std::logic_error when a reference operator is not determined.
ShotClass classify_shot(const StabilizerState &state, const Reference &ref, const ExecutionResult &result);

/// State vector variant: an operator counts as +1 when its expectation
/// exceeds 1 - 1e-6.
ShotClass classify_shot(const StateVector &state, const Reference &ref, const ExecutionResult &result);

struct SwitchOutcome {
    SwitchDirection direction;
    MeasurementRecord measurements;
    bool accepted = false;
    /// Gauge corrections applied in an accepted run.
    std::vector<PauliString> corrections_applied;
};

/// Runs a switching algorithm on a block-layout state, with optional
/// injected faults indexed by the ops of build_switch(direction).
SwitchOutcome run_switch(SwitchDirection direction, StabilizerState &state,
                         const std::vector<InjectedFault> &faults = {});
SwitchOutcome switch_1_to_2(StabilizerState &state, const std::vector<InjectedFault> &faults = {});
SwitchOutcome switch_2_to_1(StabilizerState &state, const std::vector<InjectedFault> &faults = {});

/// A single injected fault: a Pauli after a gate op, or a readout flip
/// before a measurement op.
struct FaultSite {
    size_t op_index;
    PauliString fault;
};

/// Every single fault of a Clifford circuit: the 3 or 15 non-identity
/// Paulis after each noisy one or two qubit gate and one flipping Pauli
/// before each measurement.
std::vector<FaultSite> fault_sites(const Circuit &c);

struct FaultReport {
    size_t total_sites = 0;
    size_t detected = 0;
    size_t benign = 0;
    std::vector<FaultSite> logical_failures;
    /// Classification of each site, in fault_sites order.
    std::vector<ShotClass> classes;

    /// Columns site_index, op, fault_pauli, classification.
    std::string csv(const Circuit &c) const;
};

/// Runs the circuit once per single fault on a tableau and classifies it.
/// Results do not depend on `threads` (0 = hardware concurrency).
/// Throws std::invalid_argument for non-Clifford circuits.
FaultReport enumerate_faults(const Circuit &c, const Reference &ref, size_t threads = 1);

/// Throws std::logic_error unless `trials` noiseless tableau runs with
/// different seeds are all classified success.
void check_noiseless_success(const Circuit &c, const Reference &ref, size_t trials = 8);

}  // namespace cs832

#endif
