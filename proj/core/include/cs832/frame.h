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

#ifndef CS832_FRAME_H
#define CS832_FRAME_H

#include <optional>
#include <vector>

#include "cs832/circuit.h"
#include "cs832/protocol.h"

namespace cs832 {

/// Classifies noisy runs of a Clifford circuit by tracking only the Pauli
/// difference between the noisy run and a noiseless one.
///
/// A measurement outcome flips when the frame anticommutes with the
/// measured observable. A conditional correction enters the frame when its
/// condition's flip parity is odd, and a DISCARD_IF fires on an odd flip
/// parity. At the end a frame anticommuting with a reference stabilizer
/// means discard, otherwise one anticommuting with a reference logical
/// means failure. This is exact provided every noiseless run succeeds,
/// which the constructor checks on a tableau.
///
/// Circuits may also contain diagonal non-Clifford gates. A frame with no X
/// or Y component on such a gate's support commutes with it and passes
/// through unchanged; any other frame stalls the propagation.
class FrameSimulator {
   public:
    FrameSimulator(const Circuit &c, const Reference &ref);
    /// Propagation only, without a reference. Allows T, T_DAG and CCZ.
    explicit FrameSimulator(const Circuit &c);

    /// Frame and readout flips at the end of a run.
    struct Propagation {
        /// A DISCARD_IF fired. When set the remaining fields are partial.
        bool discarded = false;
        PauliString frame;
        /// Flip of each measurement, in circuit order.
        std::vector<uint8_t> flips;
    };

    /// Propagates the faults (sorted by op index). Returns nullopt when the
    /// frame stalls on a non-Clifford gate before any DISCARD_IF fired.
    std::optional<Propagation> propagate(const std::vector<InjectedFault> &faults) const;

    /// Classification of a run with the given faults. Needs a reference.
    ShotClass run(const std::vector<InjectedFault> &faults) const;

    size_t num_measurements() const;

   private:
    struct CompiledOp {
        OpKind kind;
        Gate gate;
        char basis;
        size_t qubit;
        /// MEASURE: slot in the flip record.
        size_t slot;
        PauliString pauli;
        std::vector<size_t> condition;
    };

    size_t num_qubits_;
    size_t num_measurements_ = 0;
    void compile(const Circuit &c);

    std::vector<CompiledOp> ops_;
    std::vector<PauliString> stabilizers_;
    std::vector<PauliString> logicals_;
    bool has_reference_ = false;
};

}  // namespace cs832

#endif
