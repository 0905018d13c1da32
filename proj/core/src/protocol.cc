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

#include "cs832/protocol.h"

#include <sstream>
#include <stdexcept>

#include "cs832/parallel.h"

namespace cs832 {

namespace {

constexpr double EXPECTATION_TOLERANCE = 1e-6;
constexpr uint64_t ENUMERATION_SEED = 0x5eed;

std::vector<PauliString> map_all(const std::vector<PauliString> &ps, const auto &f) {
    std::vector<PauliString> out;
    out.reserve(ps.size());
    for (const auto &p : ps) {
        out.push_back(f(p));
    }
    return out;
}

int peek_sign(const StabilizerState &state, const PauliString &p, const std::string &what) {
    auto v = state.peek(p);
    if (!v) {
        throw std::logic_error("Reference " + what + " " + p.str() + " is not determined by the final state");
    }
    return *v;
}

}  // namespace

Reference Reference::conjugated(const std::vector<Gate> &gates) const {
    auto f = [&](const PauliString &p) {
        PauliString r = p;
        for (const auto &g : gates) {
            conjugate_in_place(g, r);
        }
        return r;
    };
    return {name, map_all(stabilizers, f), map_all(logicals, f)};
}

Reference Reference::with_pauli(const PauliString &p) const {
    auto f = [&](const PauliString &s) { return s.commutes(p) ? s : s.negated(); };
    return {name, map_all(stabilizers, f), map_all(logicals, f)};
}

Reference Reference::embedded(size_t num_qubits, size_t offset) const {
    auto f = [&](const PauliString &s) {
        std::vector<size_t> map;
        for (size_t q = 0; q < s.n; q++) {
            map.push_back(offset + q);
        }
        return s.embedded(num_qubits, map);
    };
    return {name, map_all(stabilizers, f), map_all(logicals, f)};
}

Reference code_reference(const CodeDefinition &code, const std::string &pattern, size_t num_qubits, size_t offset) {
    if (pattern.size() != code.logical_x.size()) {
        throw std::invalid_argument("Pattern '" + pattern + "' does not match " +
                                    std::to_string(code.logical_x.size()) + " logical qubits");
    }
    Reference ref;
    ref.name = code.name + " |" + pattern + ">";
    ref.stabilizers = code.stabilizers;
    for (size_t j = 0; j < pattern.size(); j++) {
        switch (pattern[j]) {
            case '0':
                ref.logicals.push_back(code.logical_z[j]);
                break;
            case '1':
                ref.logicals.push_back(code.logical_z[j].negated());
                break;
            case '+':
                ref.logicals.push_back(code.logical_x[j]);
                break;
            case '-':
                ref.logicals.push_back(code.logical_x[j].negated());
                break;
            default:
                throw std::invalid_argument("Bad logical state character '" + std::string(1, pattern[j]) + "'");
        }
    }
    return ref.embedded(num_qubits, offset);
}

Reference prep_reference(CodeVersion version, LogicalState state) {
    return code_reference(code_for(version), logical_state_label(state), block_circuit().num_qubits());
}

std::string shot_class_name(ShotClass c) {
    switch (c) {
        case ShotClass::SUCCESS:
            return "success";
        case ShotClass::DISCARD:
            return "discard";
        case ShotClass::FAILURE:
            return "failure";
    }
    return "";
}

ShotClass classify_shot(const StabilizerState &state, const Reference &ref, const ExecutionResult &result) {
    if (result.discarded) {
        return ShotClass::DISCARD;
    }
    for (const auto &s : ref.stabilizers) {
        if (peek_sign(state, s, "stabilizer") == -1) {
            return ShotClass::DISCARD;
        }
    }
    for (const auto &l : ref.logicals) {
        if (peek_sign(state, l, "logical") == -1) {
            return ShotClass::FAILURE;
        }
    }
    return ShotClass::SUCCESS;
}

ShotClass classify_shot(const StateVector &state, const Reference &ref, const ExecutionResult &result) {
    if (result.discarded) {
        return ShotClass::DISCARD;
    }
    for (const auto &s : ref.stabilizers) {
        if (state.expectation(s) < 1 - EXPECTATION_TOLERANCE) {
            return ShotClass::DISCARD;
        }
    }
    for (const auto &l : ref.logicals) {
        if (state.expectation(l) < 1 - EXPECTATION_TOLERANCE) {
            return ShotClass::FAILURE;
        }
    }
    return ShotClass::SUCCESS;
}

SwitchOutcome run_switch(SwitchDirection direction, StabilizerState &state, const std::vector<InjectedFault> &faults) {
    Circuit c = build_switch(direction);
    ExecutionResult r = run_on_tableau(c, state, faults);
    SwitchOutcome out;
    out.direction = direction;
    out.measurements = r.record;
    out.accepted = !r.discarded;
    if (out.accepted) {
        CodeDefinition sub = subsystem_code();
        const auto &fixes = direction == SwitchDirection::V1_TO_V2 ? sub.gauge_x : sub.gauge_z;
        const char *names[3] = {"g4", "g5", "g6"};
        for (size_t i = 0; i < 3; i++) {
            if (r.record.get(names[i]) == -1) {
                out.corrections_applied.push_back(fixes[i]);
            }
        }
    }
    return out;
}

SwitchOutcome switch_1_to_2(StabilizerState &state, const std::vector<InjectedFault> &faults) {
    return run_switch(SwitchDirection::V1_TO_V2, state, faults);
}

SwitchOutcome switch_2_to_1(StabilizerState &state, const std::vector<InjectedFault> &faults) {
    return run_switch(SwitchDirection::V2_TO_V1, state, faults);
}

std::vector<FaultSite> fault_sites(const Circuit &c) {
    size_t n = c.num_qubits();
    std::vector<FaultSite> out;
    const auto &ops = c.ops();
    for (size_t k = 0; k < ops.size(); k++) {
        const Op &op = ops[k];
        if (op.kind == OpKind::MEASURE) {
            out.push_back({k, PauliString::single(n, op.qubit, op.basis == 'Z' ? 'X' : 'Z')});
            continue;
        }
        if (op.kind != OpKind::GATE || op.noiseless) {
            continue;
        }
        std::vector<size_t> qs = op.gate.qubits();
        size_t count = size_t(1) << (2 * qs.size());
        for (size_t code = 1; code < count; code++) {
            PauliString p(n);
            for (size_t t = 0; t < qs.size(); t++) {
                p.set(qs[t], "IXYZ"[(code >> (2 * t)) & 3]);
            }
            out.push_back({k, p});
        }
    }
    return out;
}

std::string FaultReport::csv(const Circuit &c) const {
    std::vector<FaultSite> sites = fault_sites(c);
    std::ostringstream out;
    out << "site_index,op,fault_pauli,classification\n";
    for (size_t i = 0; i < sites.size() && i < classes.size(); i++) {
        out << i << ",\"" << c.ops()[sites[i].op_index].str() << "\"," << sites[i].fault.str() << ","
            << shot_class_name(classes[i]) << "\n";
    }
    return out.str();
}

FaultReport enumerate_faults(const Circuit &c, const Reference &ref, size_t threads) {
    if (!c.is_clifford()) {
        throw std::invalid_argument("Fault enumeration needs a Clifford circuit");
    }
    std::vector<FaultSite> sites = fault_sites(c);
    FaultReport report;
    report.total_sites = sites.size();
    report.classes.resize(sites.size());
    parallel_for(sites.size(), threads, [&](size_t i) {
        StabilizerState state(c.num_qubits(), ENUMERATION_SEED);
        ExecutionResult r = run_on_tableau(c, state, {{sites[i].op_index, sites[i].fault}});
        report.classes[i] = classify_shot(state, ref, r);
    });
    for (size_t i = 0; i < sites.size(); i++) {
        switch (report.classes[i]) {
            case ShotClass::SUCCESS:
                report.benign++;
                break;
            case ShotClass::DISCARD:
                report.detected++;
                break;
            case ShotClass::FAILURE:
                report.logical_failures.push_back(sites[i]);
                break;
        }
    }
    return report;
}

void check_noiseless_success(const Circuit &c, const Reference &ref, size_t trials) {
    for (size_t t = 0; t < trials; t++) {
        StabilizerState state(c.num_qubits(), t);
        ExecutionResult r = run_on_tableau(c, state);
        ShotClass k = classify_shot(state, ref, r);
        if (k != ShotClass::SUCCESS) {
            throw std::logic_error("Noiseless run of " + ref.name + " was classified " + shot_class_name(k));
        }
    }
}

}  // namespace cs832
