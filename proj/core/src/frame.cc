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

#include "cs832/frame.h"

#include <map>
#include <stdexcept>
#include <string>

namespace cs832 {

namespace {

bool is_diagonal_non_clifford(GateKind k) {
    return k == GateKind::T || k == GateKind::T_DAG || k == GateKind::CCZ;
}

}  // namespace

FrameSimulator::FrameSimulator(const Circuit &c, const Reference &ref)
    : num_qubits_(c.num_qubits()), stabilizers_(ref.stabilizers), logicals_(ref.logicals), has_reference_(true) {
    if (!c.is_clifford()) {
        throw std::invalid_argument("Frame simulation against a reference needs a Clifford circuit");
    }
    check_noiseless_success(c, ref);
    compile(c);
}

FrameSimulator::FrameSimulator(const Circuit &c) : num_qubits_(c.num_qubits()) {
    for (const Op &op : c.ops()) {
        if (op.kind == OpKind::GATE && !is_clifford(op.gate.kind) && !is_diagonal_non_clifford(op.gate.kind)) {
            throw std::invalid_argument("Frame simulation does not support gate " +
                                        std::string(gate_name(op.gate.kind)));
        }
    }
    compile(c);
}

void FrameSimulator::compile(const Circuit &c) {
    std::map<std::string, size_t> slots;
    for (const Op &op : c.ops()) {
        CompiledOp k{op.kind, op.gate, op.basis, op.qubit, 0, op.pauli, {}};
        if (op.kind == OpKind::MEASURE) {
            k.slot = num_measurements_++;
            slots[op.label] = k.slot;
        }
        for (const auto &label : op.condition.labels) {
            k.condition.push_back(slots.at(label));
        }
        ops_.push_back(std::move(k));
    }
}

size_t FrameSimulator::num_measurements() const {
    return num_measurements_;
}

std::optional<FrameSimulator::Propagation> FrameSimulator::propagate(const std::vector<InjectedFault> &faults) const {
    Propagation out{false, PauliString(num_qubits_), std::vector<uint8_t>(num_measurements_, 0)};
    if (faults.empty()) {
        return out;
    }
    PauliString &frame = out.frame;
    std::vector<uint8_t> &flips = out.flips;
    size_t next = 0;
    auto parity = [&](const std::vector<size_t> &cond) {
        uint8_t v = 0;
        for (size_t s : cond) {
            v ^= flips[s];
        }
        return v != 0;
    };
    auto inject = [&](size_t k) {
        while (next < faults.size() && faults[next].op_index == k) {
            frame *= faults[next].pauli;
            next++;
        }
    };
    // Ops before the first fault see an empty frame and change nothing.
    for (size_t k = faults[0].op_index; k < ops_.size(); k++) {
        const CompiledOp &op = ops_[k];
        switch (op.kind) {
            case OpKind::GATE:
                if (is_diagonal_non_clifford(op.gate.kind)) {
                    uint64_t support = 0;
                    for (size_t q : op.gate.qubits()) {
                        support |= uint64_t(1) << q;
                    }
                    if (frame.xs & support) {
                        if (out.discarded) {
                            return out;
                        }
                        return std::nullopt;
                    }
                } else {
                    conjugate_in_place(op.gate, frame);
                }
                break;
            case OpKind::MEASURE: {
                inject(k);
                uint64_t bit = uint64_t(1) << op.qubit;
                // A Z readout flips on an X component and vice versa.
                flips[op.slot] = ((op.basis == 'Z' ? frame.xs : frame.zs) & bit) != 0;
                break;
            }
            case OpKind::RESET:
                frame.set(op.qubit, 'I');
                break;
            case OpKind::CORRECT:
                if (!op.condition.empty() && parity(op.condition)) {
                    frame *= op.pauli;
                }
                break;
            case OpKind::DISCARD_IF:
                out.discarded = out.discarded || parity(op.condition);
                break;
        }
        inject(k);
    }
    if (next != faults.size()) {
        throw std::invalid_argument("Injected faults must be sorted by op index and lie inside the circuit");
    }
    return out;
}

ShotClass FrameSimulator::run(const std::vector<InjectedFault> &faults) const {
    if (!has_reference_) {
        throw std::logic_error("FrameSimulator::run needs a reference");
    }
    if (faults.empty()) {
        return ShotClass::SUCCESS;
    }
    Propagation r = *propagate(faults);
    if (r.discarded) {
        return ShotClass::DISCARD;
    }
    for (const auto &s : stabilizers_) {
        if (!r.frame.commutes(s)) {
            return ShotClass::DISCARD;
        }
    }
    for (const auto &l : logicals_) {
        if (!r.frame.commutes(l)) {
            return ShotClass::FAILURE;
        }
    }
    return ShotClass::SUCCESS;
}

}  // namespace cs832
