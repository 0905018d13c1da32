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

#ifndef CS832_CIRCUIT_H
#define CS832_CIRCUIT_H

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cs832/gates.h"
#include "cs832/pauli.h"
#include "cs832/statevec.h"
#include "cs832/tableau.h"

namespace cs832 {

enum class OpKind : uint8_t { GATE, MEASURE, RESET, CORRECT, DISCARD_IF };

/// Parity of measurement outcomes: true when an odd number of the listed
/// measurements returned -1. An empty condition is always false, except
/// for CORRECT where it means "unconditional".
struct Condition {
    std::vector<std::string> labels;

    bool evaluate(const MeasurementRecord &record) const;
    /// "a ^ b ^ c".
    std::string str() const;
    bool operator==(const Condition &other) const;
};

struct Op {
    OpKind kind = OpKind::GATE;
    /// GATE.
    Gate gate;
    /// GATE: excluded from noise and fault enumeration.
    bool noiseless = false;
    /// MEASURE and RESET: 'Z' or 'X'.
    char basis = 'Z';
    /// MEASURE and RESET.
    size_t qubit = 0;
    /// MEASURE.
    std::string label;
    /// CORRECT.
    PauliString pauli;
    /// CORRECT and DISCARD_IF.
    Condition condition;

    /// One line of the text format.
    std::string str() const;
    /// Qubits the op acts on; empty for classical ops.
    std::vector<size_t> qubits() const;
    bool operator==(const Op &other) const;
};

/// Ordered list of operations over data, ancilla and flag qubits.
///
/// Every qubit starts in |0>. Ops are checked as they are appended: qubit
/// indices must be in range, labels unique, conditions may only reference
/// earlier labels, and a measured ancilla or flag must be reset before any
/// gate touches it again.
class Circuit {
   public:
    Circuit() = default;
    /// A circuit with data qubits 0..num_data-1.
    explicit Circuit(size_t num_data);

    size_t add_ancilla();
    size_t add_flag();

    size_t num_qubits() const;
    const std::vector<size_t> &data() const;
    const std::vector<size_t> &ancillas() const;
    const std::vector<size_t> &flags() const;
    const std::vector<Op> &ops() const;
    bool has_label(const std::string &label) const;

    void gate(const Gate &g, bool noiseless = false);
    void gate(GateKind k, size_t q0, bool noiseless = false);
    void gate(GateKind k, size_t q0, size_t q1, bool noiseless = false);
    void measure(char basis, size_t q, const std::string &label);
    void reset(char basis, size_t q);
    void correct(const PauliString &p, Condition condition = {});
    void discard_if(Condition condition);

    /// Appends `other`, mapping its qubit k to qubit_map[k] and prefixing
    /// its labels. Registers of `other` must map onto existing qubits.
    void append(const Circuit &other, const std::vector<size_t> &qubit_map, const std::string &label_prefix = "");
    /// Appends a circuit with the same qubit layout.
    void append(const Circuit &other);

    /// Marks every gate appended so far as noiseless.
    void make_noiseless();

    bool is_clifford() const;
    size_t count(OpKind kind) const;
    size_t count_noisy_gates() const;

    /// Line oriented text form, see from_text.
    std::string to_text() const;
    /// Parses the text form:
    ///   QUBITS n / DATA .. / ANCILLA .. / FLAG ..   header lines
    ///   NAME t0 [t1 [t2]] [NOISELESS]              gates
    ///   M basis q label / R basis q
    ///   CORR pauli [IF a ^ b]
    ///   DISCARD_IF a ^ b
    /// Blank lines and lines starting with '#' are ignored.
    static Circuit from_text(const std::string &text);

    bool operator==(const Circuit &other) const;

   private:
    void check_qubit(size_t q) const;
    void check_condition(const Condition &c) const;
    void touch(size_t q);
    size_t add_qubit();

    size_t num_qubits_ = 0;
    std::vector<size_t> data_;
    std::vector<size_t> ancillas_;
    std::vector<size_t> flags_;
    std::vector<Op> ops_;
    std::vector<std::string> labels_;
    /// Per qubit: measured and not yet reset.
    std::vector<bool> stale_;
};

/// A Pauli applied at one op: after a gate, before a measurement.
struct InjectedFault {
    size_t op_index;
    PauliString pauli;
};

/// Outcome of executing a circuit once.
struct ExecutionResult {
    MeasurementRecord record;
    /// Some DISCARD_IF fired.
    bool discarded = false;
};

/// Runs a Clifford circuit on a tableau. `faults` must be sorted by op index.
ExecutionResult run_on_tableau(const Circuit &c, StabilizerState &state,
                               const std::vector<InjectedFault> &faults = {});

/// Runs any circuit on a state vector. With `stop_on_discard` execution
/// ends at the first DISCARD_IF that fires.
ExecutionResult run_on_statevec(const Circuit &c, StateVector &state, std::mt19937_64 &rng,
                                const std::vector<InjectedFault> &faults = {}, bool stop_on_discard = false);

}  // namespace cs832

#endif
