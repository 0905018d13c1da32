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

#include "cs832/codes.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "cs832/tableau.h"

namespace cs832 {

namespace {

PauliString P(std::string_view text) {
    return PauliString::from_str(text, BLOCK_QUBITS);
}

bool is_pure(const PauliString &p, char type) {
    return type == 'X' ? p.zs == 0 : p.xs == 0;
}

// Lexicographic order on sorted support, then on the letter pattern.
bool lex_less(const PauliString &a, const PauliString &b) {
    for (size_t q = 0; q < a.n; q++) {
        bool ia = (a.support() >> q) & 1;
        bool ib = (b.support() >> q) & 1;
        if (ia != ib) {
            return ia;
        }
    }
    return a.dense_str() < b.dense_str();
}

// Minimum-weight representatives of `op` times the group generated by
// `gens`, sorted lexicographically.
std::vector<PauliString> min_weight_candidates(const PauliString &op, const std::vector<PauliString> &gens) {
    std::vector<PauliString> best;
    size_t best_w = op.n + 1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << gens.size()); mask++) {
        PauliString c = op;
        for (size_t k = 0; k < gens.size(); k++) {
            if ((mask >> k) & 1) {
                c *= gens[k];
            }
        }
        if (c.weight() < best_w) {
            best_w = c.weight();
            best.clear();
        }
        if (c.weight() == best_w && std::find(best.begin(), best.end(), c) == best.end()) {
            best.push_back(c);
        }
    }
    std::sort(best.begin(), best.end(), lex_less);
    return best;
}

// Reduces each logical of one type as documented on derive_version.
std::vector<PauliString> reduce_logicals(const std::vector<PauliString> &logicals,
                                         const std::vector<PauliString> &stabilizers, char type) {
    std::vector<PauliString> same_type;
    for (const auto &s : stabilizers) {
        if (is_pure(s, type)) {
            same_type.push_back(s);
        }
    }
    std::vector<std::vector<PauliString>> cands;
    std::vector<bool> keep;
    uint64_t common = ~uint64_t{0};
    for (const auto &l : logicals) {
        cands.push_back(min_weight_candidates(l, same_type));
        keep.push_back(l.weight() == cands.back().front().weight());
        if (keep.back()) {
            continue;
        }
        uint64_t seen = 0;
        for (const auto &c : cands.back()) {
            seen |= c.support();
        }
        common &= seen;
    }
    std::vector<PauliString> out;
    for (size_t i = 0; i < cands.size(); i++) {
        if (keep[i]) {
            out.push_back(logicals[i]);
            continue;
        }
        const auto &cs = cands[i];
        const PauliString *pick = &cs.front();
        if (common != 0) {
            uint64_t preferred = uint64_t{1} << (type == 'X' ? BLOCK_QUBITS - 2 : BLOCK_QUBITS - 1);
            uint64_t anchor = (common & preferred) ? preferred : common & (~common + 1);
            for (const auto &c : cs) {
                if (c.support() & anchor) {
                    pick = &c;
                    break;
                }
            }
        }
        out.push_back(*pick);
    }
    return out;
}

void require(bool ok, const std::string &msg) {
    if (!ok) {
        throw std::logic_error(msg);
    }
}

std::vector<PauliString> offset_all(const std::vector<PauliString> &ps, size_t offset) {
    std::vector<size_t> map;
    for (size_t q = 0; q < BLOCK_QUBITS; q++) {
        map.push_back(q + offset);
    }
    std::vector<PauliString> out;
    for (const auto &p : ps) {
        out.push_back(p.embedded(2 * BLOCK_QUBITS, map));
    }
    return out;
}

LogicalGateSpec gate_spec(const std::string &name, CodeVersion v, std::vector<Gate> gates) {
    LogicalGateSpec s;
    s.name = name;
    s.version = v;
    s.realization = Realization::GATES;
    s.gates = std::move(gates);
    s.byproduct = PauliString(BLOCK_QUBITS);
    return s;
}

LogicalGateSpec perm_spec(const std::string &name, CodeVersion v, std::vector<std::vector<size_t>> cycles) {
    LogicalGateSpec s;
    s.name = name;
    s.version = v;
    s.realization = Realization::PERMUTATION;
    s.permutation.resize(BLOCK_QUBITS);
    for (size_t q = 0; q < BLOCK_QUBITS; q++) {
        s.permutation[q] = q;
    }
    for (const auto &c : cycles) {
        for (size_t k = 0; k < c.size(); k++) {
            s.permutation[c[k]] = c[(k + 1) % c.size()];
        }
    }
    s.byproduct = PauliString(BLOCK_QUBITS);
    return s;
}

}  // namespace

void CodeDefinition::validate() const {
    for (const auto &s : stabilizers) {
        require(s.n == n && s.is_hermitian(), name + ": bad stabilizer " + s.str());
        for (const auto &t : stabilizers) {
            require(s.commutes(t), name + ": stabilizers " + s.str() + " and " + t.str() + " anticommute");
        }
    }
    require(logical_x.size() == logical_z.size(), name + ": unpaired logicals");
    require(gauge_x.size() == gauge_z.size(), name + ": unpaired gauge operators");
    auto check_pairs = [&](const std::vector<PauliString> &xs, const std::vector<PauliString> &zs,
                           const std::string &what) {
        for (size_t i = 0; i < xs.size(); i++) {
            for (const auto &s : stabilizers) {
                require(xs[i].commutes(s) && zs[i].commutes(s), name + ": " + what + " anticommutes with " + s.str());
            }
            for (size_t j = 0; j < zs.size(); j++) {
                bool anti = !xs[i].commutes(zs[j]);
                require(anti == (i == j), name + ": bad " + what + " pairing " + xs[i].str() + " / " + zs[j].str());
                if (i != j) {
                    require(xs[i].commutes(xs[j]) && zs[i].commutes(zs[j]), name + ": " + what + " mismatch");
                }
            }
        }
    };
    check_pairs(logical_x, logical_z, "logical");
    // Fixed gauge operators may coincide with stabilizers; only free gauge
    // pairs must anticommute pairwise.
    for (size_t i = 0; i < gauge_x.size(); i++) {
        for (size_t j = 0; j < logical_x.size(); j++) {
            require(gauge_x[i].commutes(logical_x[j]) && gauge_x[i].commutes(logical_z[j]) &&
                        gauge_z[i].commutes(logical_x[j]) && gauge_z[i].commutes(logical_z[j]),
                    name + ": gauge operator does not commute with logicals");
        }
        require(!gauge_x[i].commutes(gauge_z[i]), name + ": gauge pair commutes");
    }
}

size_t CodeDefinition::distance() const {
    size_t best = n + 1;
    uint64_t full = (uint64_t{1} << n) - 1;
    for (uint64_t xs = 0; xs <= full; xs++) {
        for (uint64_t zs = 0; zs <= full; zs++) {
            if ((xs | zs) == 0) {
                continue;
            }
            size_t w = std::popcount(xs | zs);
            if (w >= best) {
                continue;
            }
            PauliString p = PauliString::from_masks(n, xs, zs);
            bool commutes_all = true;
            for (const auto &s : stabilizers) {
                if (!s.commutes(p)) {
                    commutes_all = false;
                    break;
                }
            }
            if (!commutes_all) {
                continue;
            }
            if (group_sign(stabilizers, p).has_value()) {
                continue;
            }
            best = w;
        }
    }
    return best;
}

std::string CodeDefinition::catalog() const {
    std::ostringstream out;
    out << "# " << name << "\n";
    for (size_t k = 0; k < stabilizers.size(); k++) {
        out << "S" << k << " = " << stabilizers[k].str() << "\n";
    }
    for (size_t j = 0; j < logical_x.size(); j++) {
        out << "X" << j + 1 << " = " << logical_x[j].str() << "\n";
        out << "Z" << j + 1 << " = " << logical_z[j].str() << "\n";
    }
    for (size_t i = 0; i < gauge_x.size(); i++) {
        out << "GX" << i + 4 << " = " << gauge_x[i].str() << "\n";
        out << "GZ" << i + 4 << " = " << gauge_z[i].str() << "\n";
    }
    for (const auto &c : complementary_checks) {
        out << c.name << " = " << c.op.str() << "\n";
    }
    return out.str();
}

CodeDefinition parent_code() {
    CodeDefinition c;
    c.name = "[[8,6,2]]";
    c.stabilizers = {P("X^8"), P("Z^8")};
    c.logical_x = {P("X0X1X2X3"), P("X0X1X4X5"), P("X0X2X4X6"), P("X7X3"), P("X7X5"), P("X7X6")};
    c.logical_z = {P("Z0Z4"), P("Z0Z2"), P("Z0Z1"), P("Z0Z1Z2Z3"), P("Z0Z1Z4Z5"), P("Z0Z2Z4Z6")};
    return c;
}

CodeDefinition subsystem_code() {
    CodeDefinition p = parent_code();
    CodeDefinition c;
    c.name = "[[8,3,3,2]]";
    c.stabilizers = p.stabilizers;
    c.logical_x.assign(p.logical_x.begin(), p.logical_x.begin() + 3);
    c.logical_z.assign(p.logical_z.begin(), p.logical_z.begin() + 3);
    c.gauge_x.assign(p.logical_x.begin() + 3, p.logical_x.end());
    c.gauge_z.assign(p.logical_z.begin() + 3, p.logical_z.end());
    c.complementary_checks = {{"CX", P("X0X1X2X4")}, {"CZ", P("Z4Z5Z6Z7")}};
    return c;
}

CodeDefinition derive_version(GaugeFix fix) {
    CodeDefinition c = subsystem_code();
    const auto &fixed = fix == GaugeFix::PLUS ? c.gauge_x : c.gauge_z;
    c.name = fix == GaugeFix::PLUS ? "[[8,3,2]]_1" : "[[8,3,2]]_2";
    for (const auto &g : fixed) {
        c.stabilizers.push_back(g);
    }
    // The fixed gauge operators are now stabilizers and their partners are
    // no longer symmetries, so the result has no gauge qubits.
    c.gauge_x.clear();
    c.gauge_z.clear();
    c.logical_x = reduce_logicals(c.logical_x, c.stabilizers, 'X');
    c.logical_z = reduce_logicals(c.logical_z, c.stabilizers, 'Z');
    c.validate();
    return c;
}

CodeDefinition code_for(CodeVersion version) {
    return derive_version(version == CodeVersion::V1 ? GaugeFix::PLUS : GaugeFix::ZERO);
}

ComplementaryCheck complementary_check(SwitchDirection direction) {
    CodeDefinition sub = subsystem_code();
    ComplementaryCheck c;
    if (direction == SwitchDirection::V2_TO_V1) {
        c.op = P("X0X1X2X4");
        c.partners = sub.gauge_x;
        c.stabilizer = P("X^8");
    } else {
        c.op = P("Z4Z5Z6Z7");
        c.partners = {sub.gauge_z[0]};
        c.stabilizer = P("Z^8");
    }
    PauliString prod = c.op;
    for (const auto &g : c.partners) {
        prod *= g;
    }
    require(prod == c.stabilizer, "complementary check identity failed for " + c.op.str());
    return c;
}

ComplementaryCheck complement_of(const PauliString &gauge) {
    if (gauge.n != BLOCK_QUBITS || !gauge.is_hermitian() || (gauge.xs != 0 && gauge.zs != 0)) {
        throw std::invalid_argument("complement_of needs a pure X or pure Z block operator");
    }
    ComplementaryCheck c;
    c.stabilizer = gauge.zs == 0 ? P("X^8") : P("Z^8");
    c.partners = {gauge};
    c.op = (c.stabilizer * gauge).unsigned_part();
    return c;
}

std::vector<Gate> LogicalGateSpec::physical_gates() const {
    switch (realization) {
        case Realization::GATES:
            return gates;
        case Realization::PERMUTATION:
            return permutation_to_swaps(permutation);
        case Realization::GADGETS: {
            std::vector<Gate> out;
            for (size_t q = 0; q < byproduct.n; q++) {
                char c = byproduct.at(q);
                if (c != 'I') {
                    out.emplace_back(c == 'X' ? GateKind::X : c == 'Y' ? GateKind::Y : GateKind::Z, q);
                }
            }
            for (const auto &g : gadgets) {
                out.emplace_back(g.rotation, g.data, g.shared);
            }
            return out;
        }
    }
    return {};
}

PauliString LogicalGateSpec::conjugate_pauli(const PauliString &p) const {
    if (realization == Realization::PERMUTATION) {
        return permute_pauli(p, permutation);
    }
    PauliString r = p;
    for (const auto &g : physical_gates()) {
        conjugate_in_place(g, r);
    }
    return r;
}

std::vector<LogicalGateSpec> logical_gate_table(CodeVersion version) {
    std::vector<LogicalGateSpec> t;
    if (version == CodeVersion::V1) {
        // Logical j lives on qubit q_j with shared qubits 0 (Z) and 6 (X).
        const size_t qs[3] = {4, 2, 1};
        for (size_t j = 0; j < 3; j++) {
            size_t q = qs[j];
            std::string idx = std::to_string(j + 1);
            LogicalGateSpec h;
            h.name = "H" + idx;
            h.version = version;
            h.realization = Realization::GADGETS;
            h.gadgets = {{GateKind::ZZ, q, 0}, {GateKind::XX, q, 6}, {GateKind::ZZ, q, 0}};
            h.byproduct = PauliString(BLOCK_QUBITS);
            h.byproduct.set(q, 'Y');
            h.byproduct.set(6, 'X');
            h.byproduct.set(0, 'Z');
            t.push_back(h);
            LogicalGateSpec s;
            s.name = "S" + idx;
            s.version = version;
            s.realization = Realization::GADGETS;
            s.gadgets = {{GateKind::ZZ, q, 0}};
            s.byproduct = PauliString(BLOCK_QUBITS);
            t.push_back(s);
            LogicalGateSpec sx = s;
            sx.name = "SQRT_X_DAG" + idx;
            sx.gadgets = {{GateKind::XX, q, 6}};
            t.push_back(sx);
        }
        t.push_back(perm_spec("SWAP12", version, {{4, 2}}));
        t.push_back(perm_spec("SWAP13", version, {{4, 1}}));
        t.push_back(perm_spec("SWAP23", version, {{2, 1}}));
        return t;
    }
    t.push_back(gate_spec("CCZ", version,
                          {Gate(GateKind::T, 0), Gate(GateKind::T_DAG, 1), Gate(GateKind::T_DAG, 2),
                           Gate(GateKind::T, 3), Gate(GateKind::T_DAG, 4), Gate(GateKind::T, 5),
                           Gate(GateKind::T, 6), Gate(GateKind::T_DAG, 7)}));
    t.push_back(gate_spec("CZ12", version,
                          {Gate(GateKind::S, 0), Gate(GateKind::S_DAG, 2), Gate(GateKind::S_DAG, 4),
                           Gate(GateKind::S, 6)}));
    t.push_back(gate_spec("CZ13", version,
                          {Gate(GateKind::S, 0), Gate(GateKind::S_DAG, 1), Gate(GateKind::S_DAG, 4),
                           Gate(GateKind::S, 5)}));
    t.push_back(gate_spec("CZ23", version,
                          {Gate(GateKind::S, 0), Gate(GateKind::S_DAG, 1), Gate(GateKind::S_DAG, 2),
                           Gate(GateKind::S, 3)}));
    t.push_back(perm_spec("SWAP12", version, {{0, 4, 6, 2}, {1, 5, 7, 3}}));
    t.push_back(perm_spec("SWAP13", version, {{2, 6, 7, 3}, {0, 4, 5, 1}}));
    t.push_back(perm_spec("SWAP23", version, {{0, 2, 3, 1}, {4, 6, 7, 5}}));
    t.push_back(perm_spec("CNOT12", version, {{0, 4}, {1, 5}}));
    t.push_back(perm_spec("CNOT21", version, {{0, 2}, {1, 3}}));
    t.push_back(perm_spec("CNOT13", version, {{0, 4}, {2, 6}}));
    t.push_back(perm_spec("CNOT31", version, {{0, 1}, {2, 3}}));
    t.push_back(perm_spec("CNOT23", version, {{0, 2}, {4, 6}}));
    t.push_back(perm_spec("CNOT32", version, {{0, 1}, {4, 5}}));
    return t;
}

LogicalGateSpec find_logical_gate(CodeVersion version, const std::string &name) {
    for (auto &s : logical_gate_table(version)) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::invalid_argument("No logical gate '" + name + "' in " + version_name(version));
}

std::vector<Gate> permutation_to_swaps(const std::vector<size_t> &perm) {
    size_t n = perm.size();
    std::vector<size_t> inv(n, n);
    for (size_t q = 0; q < n; q++) {
        if (perm[q] >= n || inv[perm[q]] != n) {
            throw std::invalid_argument("Not a permutation");
        }
        inv[perm[q]] = q;
    }
    // at[t] is the original qubit whose state currently sits on t.
    std::vector<size_t> at(n);
    for (size_t q = 0; q < n; q++) {
        at[q] = q;
    }
    std::vector<Gate> out;
    for (size_t t = 0; t < n; t++) {
        size_t want = inv[t];
        if (at[t] == want) {
            continue;
        }
        size_t loc = t + 1;
        while (at[loc] != want) {
            loc++;
        }
        out.emplace_back(GateKind::SWAP, t, loc);
        std::swap(at[t], at[loc]);
    }
    return out;
}

PauliString permute_pauli(const PauliString &p, const std::vector<size_t> &perm) {
    if (perm.size() != p.n) {
        throw std::invalid_argument("Permutation size does not match the Pauli");
    }
    PauliString r(p.n);
    for (size_t q = 0; q < p.n; q++) {
        r.set(perm[q], p.at(q));
    }
    r.phase = p.phase;
    return r;
}

std::vector<PauliString> joint_stabilizers(const CodeDefinition &b1, const CodeDefinition &b2) {
    std::vector<PauliString> out = offset_all(b1.stabilizers, 0);
    for (const auto &s : offset_all(b2.stabilizers, BLOCK_QUBITS)) {
        out.push_back(s);
    }
    return out;
}

std::vector<PauliString> joint_logicals_x(const CodeDefinition &b1, const CodeDefinition &b2) {
    std::vector<PauliString> out = offset_all(b1.logical_x, 0);
    for (const auto &s : offset_all(b2.logical_x, BLOCK_QUBITS)) {
        out.push_back(s);
    }
    return out;
}

std::vector<PauliString> joint_logicals_z(const CodeDefinition &b1, const CodeDefinition &b2) {
    std::vector<PauliString> out = offset_all(b1.logical_z, 0);
    for (const auto &s : offset_all(b2.logical_z, BLOCK_QUBITS)) {
        out.push_back(s);
    }
    return out;
}

bool interblock_direction_allowed(CodeVersion control, CodeVersion target) {
    std::vector<PauliString> stabs = joint_stabilizers(code_for(control), code_for(target));
    for (const auto &s : stabs) {
        PauliString img = s;
        for (size_t q = 0; q < BLOCK_QUBITS; q++) {
            conjugate_in_place(Gate(GateKind::CNOT, q, q + BLOCK_QUBITS), img);
        }
        auto sign = group_sign(stabs, img);
        if (!sign.has_value() || *sign != 1) {
            return false;
        }
    }
    return true;
}

std::string version_name(CodeVersion version) {
    return version == CodeVersion::V1 ? "V1" : "V2";
}

}  // namespace cs832
