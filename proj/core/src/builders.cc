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

#include "cs832/builders.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cs832 {

namespace {

// Physical qubit of logical j (1..3) in Version 1 gadget gates.
constexpr size_t V1_LOGICAL_QUBIT[3] = {4, 2, 1};
constexpr size_t V1_SHARED_Z = 0;
constexpr size_t V1_SHARED_X = 6;

PauliString block_op(const Circuit &c, const PauliString &op, size_t block = 0) {
    std::vector<size_t> map;
    for (size_t q = 0; q < op.n; q++) {
        map.push_back(block * BLOCK_QUBITS + q);
    }
    return op.embedded(c.num_qubits(), map);
}

PauliString block_op(const Circuit &c, std::string_view text, size_t block = 0) {
    return block_op(c, PauliString::from_str(text, BLOCK_QUBITS), block);
}

void reset_all(Circuit &c, char basis, std::initializer_list<size_t> qs) {
    for (size_t q : qs) {
        c.reset(basis, q);
    }
}

void cnots(Circuit &c, std::initializer_list<std::pair<size_t, size_t>> pairs) {
    for (auto [a, b] : pairs) {
        c.gate(GateKind::CNOT, a, b);
    }
}

// GHZ fan-out from qs[0] onto the other qubits, optionally verified by an
// ancilla coupled to the hub before and after the fan-out.
void append_ghz(Circuit &c, const std::vector<size_t> &qs, bool dual, std::optional<size_t> anc,
                const std::string &label) {
    size_t hub = qs[0];
    c.reset(dual ? 'Z' : 'X', hub);
    for (size_t k = 1; k < qs.size(); k++) {
        c.reset(dual ? 'X' : 'Z', qs[k]);
    }
    auto couple = [&](size_t a) {
        if (dual) {
            c.gate(GateKind::CNOT, a, hub);
        } else {
            c.gate(GateKind::CNOT, hub, a);
        }
    };
    if (anc) {
        c.reset(dual ? 'X' : 'Z', *anc);
        couple(*anc);
    }
    for (size_t k = 1; k < qs.size(); k++) {
        couple(qs[k]);
    }
    if (anc) {
        couple(*anc);
        c.measure(dual ? 'X' : 'Z', *anc, label);
        c.discard_if({{label}});
    }
}

void append_permutation(Circuit &c, const std::vector<size_t> &perm, size_t block, bool noisy) {
    for (const auto &g : permutation_to_swaps(perm)) {
        c.gate(GateKind::SWAP, g.targets[0] + block * BLOCK_QUBITS, g.targets[1] + block * BLOCK_QUBITS, !noisy);
    }
}

void append_spec(Circuit &c, const LogicalGateSpec &spec, size_t block, bool expand_permutations) {
    if (spec.realization == Realization::PERMUTATION) {
        append_permutation(c, spec.permutation, block, expand_permutations);
        return;
    }
    if (spec.realization != Realization::GATES) {
        throw std::invalid_argument("Gadget based gate " + spec.name + " cannot be inlined");
    }
    for (Gate g : spec.gates) {
        for (size_t k = 0; k < g.arity(); k++) {
            g.targets[k] += block * BLOCK_QUBITS;
        }
        c.gate(g);
    }
}

void check_logical_index(size_t j) {
    if (j < 1 || j > 3) {
        throw std::invalid_argument("Logical index must be 1, 2 or 3, got " + std::to_string(j));
    }
}

}  // namespace

Circuit block_circuit(size_t blocks) {
    Circuit c(blocks * BLOCK_QUBITS);
    c.add_ancilla();
    c.add_ancilla();
    c.add_flag();
    return c;
}

size_t block_ancilla(const Circuit &c, size_t k) {
    return c.ancillas().at(k);
}

size_t block_flag(const Circuit &c) {
    return c.flags().at(0);
}

std::string logical_state_label(LogicalState s) {
    switch (s) {
        case LogicalState::ZERO_ZERO_ZERO:
            return "000";
        case LogicalState::PLUS_PLUS_PLUS:
            return "+++";
        case LogicalState::PLUS_PLUS_ZERO:
            return "++0";
        case LogicalState::ZERO_ZERO_PLUS:
            return "00+";
    }
    return "";
}

LogicalState parse_logical_state(const std::string &label) {
    for (auto s : {LogicalState::ZERO_ZERO_ZERO, LogicalState::PLUS_PLUS_PLUS, LogicalState::PLUS_PLUS_ZERO,
                   LogicalState::ZERO_ZERO_PLUS}) {
        if (logical_state_label(s) == label) {
            return s;
        }
    }
    if (label == "ppp") {
        return LogicalState::PLUS_PLUS_PLUS;
    }
    if (label == "pp0") {
        return LogicalState::PLUS_PLUS_ZERO;
    }
    if (label == "00p") {
        return LogicalState::ZERO_ZERO_PLUS;
    }
    throw std::invalid_argument("Unsupported logical state '" + label + "'");
}

Circuit build_ghz(size_t n, bool dual, bool fault_tolerant) {
    if (n < 2) {
        throw std::invalid_argument("GHZ states need at least 2 qubits, got " + std::to_string(n));
    }
    Circuit c(n);
    std::optional<size_t> anc;
    if (fault_tolerant) {
        anc = c.add_ancilla();
    }
    std::vector<size_t> qs;
    for (size_t q = 0; q < n; q++) {
        qs.push_back(q);
    }
    append_ghz(c, qs, dual, anc, "ghz_v");
    return c;
}

Circuit build_state_prep(CodeVersion version, LogicalState state) {
    Circuit c = block_circuit();
    size_t a = block_ancilla(c, 0);
    size_t b = block_ancilla(c, 1);
    size_t f = block_flag(c);
    if (version == CodeVersion::V1) {
        switch (state) {
            case LogicalState::ZERO_ZERO_ZERO:
                // GHZ on {0,1,2,4} verified by `a`, interleaved with the dual
                // GHZ on {3,5,6,7} verified by `b`.
                reset_all(c, 'X', {0, 3, 5, 6});
                reset_all(c, 'Z', {1, 2, 4, 7});
                c.reset('Z', a);
                c.reset('X', b);
                cnots(c, {{b, 7}, {0, a}, {3, 7}, {0, 4}, {5, 7}, {0, 1}, {6, 7}, {0, 2}, {b, 7}, {0, a}});
                c.measure('Z', a, "vz");
                c.measure('X', b, "vx");
                c.discard_if({{"vz"}});
                c.discard_if({{"vx"}});
                return c;
            case LogicalState::PLUS_PLUS_PLUS:
                append_ghz(c, {7, 6, 5, 4, 3, 2, 1, 0}, true, b, "vx");
                return c;
            case LogicalState::PLUS_PLUS_ZERO:
                c.reset('X', 0);
                c.reset('Z', 1);
                c.gate(GateKind::CNOT, size_t(0), size_t(1));
                append_ghz(c, {7, 6, 5, 4, 3, 2}, true, b, "vx");
                return c;
            case LogicalState::ZERO_ZERO_PLUS:
                // GHZ on {0,2,4,6} and dual GHZ on {1,3,5,7}, then the gauge
                // operator X6X7 is fixed with its complement as a check.
                reset_all(c, 'X', {0, 1, 3, 5});
                reset_all(c, 'Z', {2, 4, 6, 7});
                c.reset('Z', a);
                c.reset('X', b);
                cnots(c, {{0, a}, {0, 2}, {0, 4}, {0, 6}, {b, 7}, {0, a}, {1, 7}, {3, 7}, {5, 7}, {b, 7}});
                c.measure('Z', a, "vz");
                c.measure('X', b, "vx");
                c.discard_if({{"vz"}});
                c.discard_if({{"vx"}});
                append_pauli_measurement(c, block_op(c, "X6X7"), a, std::nullopt, "g6");
                append_pauli_measurement(c, block_op(c, "X0X1X2X3X4X5"), a, f, "c6");
                c.discard_if({{"g6", "c6"}});
                c.correct(block_op(c, "Z0Z2Z4Z6"), {{"g6"}});
                return c;
        }
    }
    switch (state) {
        case LogicalState::ZERO_ZERO_ZERO:
            append_ghz(c, {0, 1, 2, 3, 4, 5, 6, 7}, false, a, "vz");
            return c;
        case LogicalState::PLUS_PLUS_PLUS:
            // Qubits 3, 5, 6, 7 carry X0X1X2X3, X0X1X4X5, X0X2X4X6 and
            // X1X2X4X7; the first three are then checked directly.
            reset_all(c, 'X', {3, 5, 6, 7});
            reset_all(c, 'Z', {0, 1, 2, 4});
            cnots(c, {{3, 0}, {3, 1}, {3, 2}, {5, 0}, {5, 1}, {5, 4}, {6, 0}, {6, 2}, {6, 4}, {7, 1}, {7, 2}, {7, 4}});
            append_pauli_measurement(c, block_op(c, "X0X1X2X3"), a, std::nullopt, "v1");
            append_pauli_measurement(c, block_op(c, "X0X1X4X5"), a, std::nullopt, "v2");
            append_pauli_measurement(c, block_op(c, "X0X2X4X6"), a, std::nullopt, "v3");
            c.discard_if({{"v1"}});
            c.discard_if({{"v2"}});
            c.discard_if({{"v3"}});
            return c;
        case LogicalState::PLUS_PLUS_ZERO:
            // Four Bell pairs, then G^Z_6 is fixed with its complement as a
            // check.
            reset_all(c, 'X', {0, 2, 4, 6});
            reset_all(c, 'Z', {1, 3, 5, 7});
            cnots(c, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
            append_pauli_measurement(c, block_op(c, "Z0Z2Z4Z6"), a, f, "g6");
            append_pauli_measurement(c, block_op(c, "Z1Z3Z5Z7"), a, f, "c6");
            c.discard_if({{"g6", "c6"}});
            c.correct(block_op(c, "X6X7"), {{"g6"}});
            return c;
        case LogicalState::ZERO_ZERO_PLUS:
            // GHZ on {0,2,4,6} verified by `b` and GHZ on {1,3,5,7}
            // verified by `a`.
            reset_all(c, 'X', {0, 1});
            reset_all(c, 'Z', {2, 3, 4, 5, 6, 7});
            c.reset('Z', a);
            c.reset('Z', b);
            cnots(c, {{0, b}, {1, a}, {0, 2}, {1, 3}, {0, 4}, {1, 5}, {0, 6}, {1, 7}, {1, a}, {0, b}});
            c.measure('Z', a, "va");
            c.measure('Z', b, "vb");
            c.discard_if({{"va"}});
            c.discard_if({{"vb"}});
            return c;
    }
    throw std::invalid_argument("Unsupported state preparation");
}

void append_pauli_measurement(Circuit &c, const PauliString &op, size_t anc, std::optional<size_t> flag,
                              const std::string &label) {
    bool z_type = op.xs == 0;
    bool x_type = op.zs == 0;
    if (op.n != c.num_qubits() || op.sign() != 1 || op.phase != 0 || (!z_type && !x_type) || op.weight() < 2) {
        throw std::invalid_argument("Unsupported measurement of " + op.str() +
                                    ": need a positive pure X or pure Z operator of weight >= 2");
    }
    uint64_t support = op.support();
    if ((support >> anc) & 1 || (flag && ((support >> *flag) & 1))) {
        throw std::invalid_argument("Measured operator overlaps its ancilla");
    }
    std::vector<size_t> qs;
    for (size_t q = 0; q < op.n; q++) {
        if ((support >> q) & 1) {
            qs.push_back(q);
        }
    }
    c.reset(z_type ? 'Z' : 'X', anc);
    if (flag) {
        c.reset(z_type ? 'X' : 'Z', *flag);
    }
    auto flag_coupling = [&]() {
        if (z_type) {
            c.gate(GateKind::CNOT, *flag, anc);
        } else {
            c.gate(GateKind::CNOT, anc, *flag);
        }
    };
    for (size_t k = 0; k < qs.size(); k++) {
        if (flag && k == qs.size() - 1) {
            flag_coupling();
        }
        if (z_type) {
            c.gate(GateKind::CNOT, qs[k], anc);
        } else {
            c.gate(GateKind::CNOT, anc, qs[k]);
        }
        if (flag && k == 0) {
            flag_coupling();
        }
    }
    c.measure(z_type ? 'Z' : 'X', anc, label);
    if (flag) {
        std::string flag_label = label + "_flag";
        c.measure(z_type ? 'X' : 'Z', *flag, flag_label);
        c.discard_if({{flag_label}});
    }
}

Circuit build_gauge_measurement(const PauliString &op, bool flagged, const std::string &label) {
    Circuit c(op.n);
    size_t anc = c.add_ancilla();
    std::optional<size_t> flag;
    if (flagged) {
        flag = c.add_flag();
    }
    std::vector<size_t> map;
    for (size_t q = 0; q < op.n; q++) {
        map.push_back(q);
    }
    append_pauli_measurement(c, op.embedded(c.num_qubits(), map), anc, flag, label);
    return c;
}

Circuit build_switch(SwitchDirection direction, bool flagged) {
    Circuit c = block_circuit();
    size_t a = block_ancilla(c, 0);
    std::optional<size_t> f;
    if (flagged) {
        f = block_flag(c);
    }
    CodeDefinition sub = subsystem_code();
    ComplementaryCheck check = complementary_check(direction);
    const char *names[3] = {"g4", "g5", "g6"};
    bool to_v2 = direction == SwitchDirection::V1_TO_V2;
    const auto &measured = to_v2 ? sub.gauge_z : sub.gauge_x;
    const auto &fixes = to_v2 ? sub.gauge_x : sub.gauge_z;
    for (size_t i = 0; i < 3; i++) {
        // Weight 2 X type gauge operators need no flag.
        append_pauli_measurement(c, block_op(c, measured[i]), a, to_v2 ? f : std::nullopt, names[i]);
    }
    append_pauli_measurement(c, block_op(c, check.op), a, f, "c7");
    append_pauli_measurement(c, block_op(c, check.stabilizer), a, f, "s8");
    if (to_v2) {
        c.discard_if({{"g4", "c7"}});
    } else {
        c.discard_if({{"g4", "g5", "g6", "c7"}});
    }
    c.discard_if({{"s8"}});
    for (size_t i = 0; i < 3; i++) {
        c.correct(block_op(c, fixes[i]), {{names[i]}});
    }
    return c;
}

Circuit build_stabilizer_round(CodeVersion version, const std::string &prefix) {
    Circuit c = block_circuit();
    size_t a = block_ancilla(c, 0);
    size_t f = block_flag(c);
    CodeDefinition code = code_for(version);
    for (size_t i = 0; i < code.stabilizers.size(); i++) {
        const PauliString &s = code.stabilizers[i];
        std::string label = prefix + "s" + std::to_string(i);
        append_pauli_measurement(c, block_op(c, s), a, s.weight() >= 4 ? std::optional<size_t>(f) : std::nullopt,
                                 label);
        c.discard_if({{label}});
    }
    return c;
}

void append_gadget(Circuit &c, const GadgetVariant &v, size_t d1, size_t d2, size_t a1, size_t a2) {
    std::vector<size_t> map = {d1, d2, a1, a2};
    for (const auto &g : v.gates) {
        if (g.arity() == 1) {
            c.gate(Gate(g.kind, map[g.targets[0]]));
        } else {
            c.gate(Gate(g.kind, map[g.targets[0]], map[g.targets[1]]));
        }
    }
    if (!v.recovery.is_identity()) {
        c.correct(v.recovery.unsigned_part().embedded(c.num_qubits(), map));
    }
}

void append_ancilla_input(Circuit &c, AncillaState s, size_t a1, size_t a2) {
    c.reset('X', a1);
    if (s == AncillaState::BELL) {
        c.reset('Z', a2);
        c.gate(GateKind::CNOT, a1, a2);
    } else {
        c.reset('X', a2);
    }
}

void append_ancilla_check(Circuit &c, AncillaState s, size_t a1, size_t a2, const std::string &label) {
    std::string l1 = label + "_1";
    std::string l2 = label + "_2";
    if (s == AncillaState::BELL) {
        c.gate(GateKind::CNOT, a1, a2);
        c.measure('X', a1, l1);
        c.measure('Z', a2, l2);
    } else {
        c.measure('X', a1, l1);
        c.measure('X', a2, l2);
    }
    c.discard_if({{l1}});
    c.discard_if({{l2}});
}

Circuit build_rotation_gadget(const GadgetVariant &v, size_t d1, size_t d2) {
    if (d1 == d2 || d1 >= BLOCK_QUBITS || d2 >= BLOCK_QUBITS) {
        throw std::invalid_argument("Invalid gadget target pair (" + std::to_string(d1) + ", " + std::to_string(d2) +
                                    ")");
    }
    Circuit c = block_circuit();
    size_t a1 = block_ancilla(c, 0);
    size_t a2 = block_ancilla(c, 1);
    append_ancilla_input(c, v.input, a1, a2);
    append_gadget(c, v, d1, d2, a1, a2);
    append_ancilla_check(c, v.output(), a1, a2, "chk");
    return c;
}

Circuit build_logical_hadamard(size_t j, const GadgetVariant &zz, const GadgetVariant &xx) {
    check_logical_index(j);
    if (zz.rotation != GateKind::ZZ || zz.input != AncillaState::BELL || xx.rotation != GateKind::XX ||
        xx.input != AncillaState::PLUS_PLUS) {
        throw std::invalid_argument("The Hadamard chain needs a Bell input ZZ gadget and a |++> input XX gadget");
    }
    size_t q = V1_LOGICAL_QUBIT[j - 1];
    Circuit c = block_circuit();
    size_t a1 = block_ancilla(c, 0);
    size_t a2 = block_ancilla(c, 1);
    PauliString byproduct(c.num_qubits());
    byproduct.set(q, 'Y');
    byproduct.set(V1_SHARED_X, 'X');
    byproduct.set(V1_SHARED_Z, 'Z');
    c.correct(byproduct);
    append_ancilla_input(c, AncillaState::BELL, a1, a2);
    append_gadget(c, zz, q, V1_SHARED_Z, a1, a2);
    append_gadget(c, xx, q, V1_SHARED_X, a1, a2);
    append_gadget(c, zz, q, V1_SHARED_Z, a1, a2);
    append_ancilla_check(c, AncillaState::PLUS_PLUS, a1, a2, "hchk");
    return c;
}

Circuit build_logical_hadamard(size_t j) {
    return build_logical_hadamard(j, gadget_variant(GateKind::ZZ, AncillaState::BELL),
                                  gadget_variant(GateKind::XX, AncillaState::PLUS_PLUS));
}

Circuit build_logical_gate(CodeVersion version, const std::string &name, bool expand_permutations) {
    LogicalGateSpec spec = find_logical_gate(version, name);
    if (spec.realization == Realization::GADGETS) {
        size_t j = name.back() - '0';
        if (name.rfind("H", 0) == 0) {
            return build_logical_hadamard(j);
        }
        const GadgetCall &call = spec.gadgets.at(0);
        return build_rotation_gadget(gadget_variant(call.rotation, AncillaState::BELL), call.data, call.shared);
    }
    Circuit c = block_circuit();
    append_spec(c, spec, 0, expand_permutations);
    return c;
}

std::string interblock_kind_name(InterblockKind k) {
    switch (k) {
        case InterblockKind::PARALLEL_CNOT:
            return "parallel";
        case InterblockKind::FIG3:
            return "fig3";
        case InterblockKind::SMALLEST:
            return "smallest";
        case InterblockKind::ALT:
            return "alt";
        case InterblockKind::CZ:
            return "cz";
    }
    return "";
}

InterblockKind parse_interblock_kind(const std::string &name) {
    for (auto k : {InterblockKind::PARALLEL_CNOT, InterblockKind::FIG3, InterblockKind::SMALLEST,
                   InterblockKind::ALT, InterblockKind::CZ}) {
        if (interblock_kind_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("Unknown inter-block construction '" + name + "'");
}

std::vector<size_t> interblock_cz_pairing() {
    return {0, 1, 3, 6, 7, 4, 5, 2};
}

Circuit build_interblock(InterblockKind kind, CodeVersion b1, CodeVersion b2, size_t i, size_t j,
                         bool expand_permutations) {
    check_logical_index(i);
    check_logical_index(j);
    if (kind == InterblockKind::CZ) {
        if (b1 != CodeVersion::V2 || b2 != CodeVersion::V2) {
            throw std::invalid_argument("The inter-block CZ needs two Version 2 blocks");
        }
    } else if (!interblock_direction_allowed(b1, b2)) {
        throw std::invalid_argument("Inter-block CNOT from a " + version_name(b1) + " block to a " +
                                    version_name(b2) + " block leaves the codespace");
    }
    Circuit c = block_circuit(2);
    auto transversal = [&]() {
        if (kind == InterblockKind::CZ) {
            auto perm = interblock_cz_pairing();
            for (size_t k = 0; k < BLOCK_QUBITS; k++) {
                c.gate(GateKind::CZ, k, BLOCK_QUBITS + perm[k]);
            }
        } else {
            for (size_t k = 0; k < BLOCK_QUBITS; k++) {
                c.gate(GateKind::CNOT, k, BLOCK_QUBITS + k);
            }
        }
    };
    auto in_block = [&](const std::string &name, size_t block) {
        CodeVersion v = block == 0 ? b1 : b2;
        if (name.rfind("CNOT", 0) == 0 && v != CodeVersion::V2) {
            throw std::invalid_argument("In-block " + name + " is not available in a " + version_name(v) + " block");
        }
        append_spec(c, find_logical_gate(v, name), block, expand_permutations);
    };
    auto cnot_name = [](size_t a, size_t b) { return "CNOT" + std::to_string(a) + std::to_string(b); };
    auto swap_name = [](size_t a, size_t b) {
        return "SWAP" + std::to_string(std::min(a, b)) + std::to_string(std::max(a, b));
    };
    auto smallest = [&](size_t from, size_t to, size_t block) {
        if (from == to) {
            throw std::invalid_argument("This construction needs distinct logical indices");
        }
        transversal();
        in_block(cnot_name(from, to), block);
        transversal();
        in_block(cnot_name(from, to), block);
    };
    switch (kind) {
        case InterblockKind::PARALLEL_CNOT:
            transversal();
            break;
        case InterblockKind::SMALLEST:
        case InterblockKind::CZ:
            smallest(i, j, 0);
            break;
        case InterblockKind::ALT:
            smallest(i, j, 1);
            break;
        case InterblockKind::FIG3: {
            size_t k = j;
            if (i == j) {
                k = i == 1 ? 2 : 1;
            }
            if (k != j) {
                in_block(swap_name(k, j), 1);
            }
            smallest(i, k, 0);
            if (k != j) {
                in_block(swap_name(k, j), 1);
            }
            break;
        }
    }
    return c;
}

Circuit build_grover(bool encoded) {
    if (!encoded) {
        Circuit c(3);
        for (size_t q = 0; q < 3; q++) {
            c.gate(GateKind::H, q);
        }
        c.gate(GateKind::CZ, size_t(0), size_t(2));
        c.gate(GateKind::CZ, size_t(1), size_t(2));
        for (GateKind k : {GateKind::H, GateKind::X}) {
            for (size_t q = 0; q < 3; q++) {
                c.gate(k, q);
            }
        }
        c.gate(Gate(GateKind::CCZ, 0, 1, 2));
        for (GateKind k : {GateKind::X, GateKind::H}) {
            for (size_t q = 0; q < 3; q++) {
                c.gate(k, q);
            }
        }
        for (size_t q = 0; q < 3; q++) {
            c.measure('Z', q, "b" + std::to_string(q));
        }
        return c;
    }
    Circuit c = block_circuit();
    std::vector<size_t> id;
    for (size_t q = 0; q < c.num_qubits(); q++) {
        id.push_back(q);
    }
    c.append(build_state_prep(CodeVersion::V2, LogicalState::PLUS_PLUS_PLUS), id, "prep_");
    c.append(build_stabilizer_round(CodeVersion::V2), id, "r0_");
    // Oracle CZ(1,3) CZ(2,3).
    append_spec(c, find_logical_gate(CodeVersion::V2, "CZ13"), 0, false);
    append_spec(c, find_logical_gate(CodeVersion::V2, "CZ23"), 0, false);
    size_t round = 0;
    auto hadamard_layer = [&]() {
        c.append(build_switch(SwitchDirection::V2_TO_V1), id, "sw" + std::to_string(round) + "a_");
        for (size_t j = 1; j <= 3; j++) {
            c.append(build_logical_hadamard(j), id, "h" + std::to_string(round) + std::to_string(j) + "_");
        }
        c.append(build_switch(SwitchDirection::V1_TO_V2), id, "sw" + std::to_string(round) + "b_");
        round++;
    };
    hadamard_layer();
    c.append(build_stabilizer_round(CodeVersion::V2), id, "r1_");
    // X on every logical qubit, tracked as a frame update.
    CodeDefinition v2 = code_for(CodeVersion::V2);
    PauliString x_all = v2.logical_x[0] * v2.logical_x[1] * v2.logical_x[2];
    c.correct(block_op(c, x_all.unsigned_part()));
    append_spec(c, find_logical_gate(CodeVersion::V2, "CCZ"), 0, false);
    c.correct(block_op(c, x_all.unsigned_part()));
    hadamard_layer();
    c.append(build_stabilizer_round(CodeVersion::V2), id, "r2_");
    for (size_t q = 0; q < BLOCK_QUBITS; q++) {
        c.measure('Z', q, "d" + std::to_string(q));
    }
    return c;
}

std::optional<std::string> decode_grover(const MeasurementRecord &record, bool encoded) {
    auto bit = [&](const std::string &label) { return record.get(label) == -1 ? 1 : 0; };
    std::string out;
    if (!encoded) {
        for (size_t q = 0; q < 3; q++) {
            out += char('0' + bit("b" + std::to_string(q)));
        }
        return out;
    }
    uint64_t bits = 0;
    for (size_t q = 0; q < BLOCK_QUBITS; q++) {
        bits |= uint64_t(bit("d" + std::to_string(q))) << q;
    }
    CodeDefinition v2 = code_for(CodeVersion::V2);
    for (const auto &s : v2.stabilizers) {
        if (s.xs == 0 && (std::popcount(s.zs & bits) & 1)) {
            return std::nullopt;
        }
    }
    for (const auto &z : v2.logical_z) {
        out += char('0' + (std::popcount(z.zs & bits) & 1));
    }
    return out;
}

}  // namespace cs832
