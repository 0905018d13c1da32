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

#include "cs832/gates.h"

#include <bit>
#include <stdexcept>

namespace cs832 {

namespace {

struct GateInfo {
    std::string_view name;
    size_t arity;
    bool clifford;
};

constexpr std::array<GateInfo, NUM_GATE_KINDS> GATE_INFO = {{
    {"H", 1, true},
    {"S", 1, true},
    {"S_DAG", 1, true},
    {"SQRT_X_DAG", 1, true},
    {"R_X", 1, true},
    {"X", 1, true},
    {"Y", 1, true},
    {"Z", 1, true},
    {"CNOT", 2, true},
    {"CZ", 2, true},
    {"SWAP", 2, true},
    {"XX", 2, true},
    {"YY", 2, true},
    {"ZZ", 2, true},
    {"T", 1, false},
    {"T_DAG", 1, false},
    {"CCZ", 3, false},
}};

const GateInfo &info(GateKind k) {
    return GATE_INFO[static_cast<size_t>(k)];
}

uint8_t check_qubit(size_t q) {
    if (q >= MAX_PAULI_QUBITS) {
        throw std::invalid_argument("Gate target " + std::to_string(q) + " out of range");
    }
    return static_cast<uint8_t>(q);
}

// p <- (s*i) * Q * p when p anticommutes with Q, where the gate is
// (I + s*i*Q)/sqrt2.
void apply_rotation(PauliString &p, uint64_t qx, uint64_t qz, int s) {
    bool anti = std::popcount((p.xs & qz) ^ (p.zs & qx)) & 1;
    if (!anti) {
        return;
    }
    uint8_t k = product_phase(qx, qz, p.xs, p.zs);
    p.phase = static_cast<uint8_t>((p.phase + k + (s > 0 ? 1 : 3)) & 3);
    p.xs ^= qx;
    p.zs ^= qz;
}

void apply_h(PauliString &p, size_t q) {
    uint64_t b = uint64_t{1} << q;
    bool x = p.xs & b;
    bool z = p.zs & b;
    if (x && z) {
        p.phase = static_cast<uint8_t>((p.phase + 2) & 3);
    }
    p.xs = (p.xs & ~b) | (z ? b : 0);
    p.zs = (p.zs & ~b) | (x ? b : 0);
}

void apply_cnot(PauliString &p, size_t c, size_t t) {
    uint64_t xc = (p.xs >> c) & 1;
    uint64_t zc = (p.zs >> c) & 1;
    uint64_t xt = (p.xs >> t) & 1;
    uint64_t zt = (p.zs >> t) & 1;
    if (xc & zt & (xt ^ zc ^ 1)) {
        p.phase = static_cast<uint8_t>((p.phase + 2) & 3);
    }
    p.xs ^= xc << t;
    p.zs ^= zt << c;
}

void apply_pauli(PauliString &p, size_t q, bool x, bool z) {
    bool px = (p.xs >> q) & 1;
    bool pz = (p.zs >> q) & 1;
    if ((px && z) != (pz && x)) {
        p.phase = static_cast<uint8_t>((p.phase + 2) & 3);
    }
}

void conjugate_impl(const Gate &g, PauliString &p, bool inverse) {
    const GateInfo &gi = info(g.kind);
    if (!gi.clifford) {
        throw std::invalid_argument("Unsupported gate for Pauli conjugation: " + std::string(gi.name));
    }
    for (size_t k = 0; k < gi.arity; k++) {
        if (g.targets[k] >= p.n) {
            throw std::invalid_argument("Gate " + g.str() + " targets a qubit outside the Pauli");
        }
    }
    size_t a = g.targets[0];
    size_t b = g.targets[1];
    uint64_t ma = uint64_t{1} << a;
    uint64_t mb = uint64_t{1} << b;
    int flip = inverse ? -1 : 1;
    switch (g.kind) {
        case GateKind::H:
            apply_h(p, a);
            return;
        case GateKind::S:
            apply_rotation(p, 0, ma, -flip);
            return;
        case GateKind::S_DAG:
            apply_rotation(p, 0, ma, +flip);
            return;
        case GateKind::SQRT_X_DAG:
            apply_rotation(p, ma, 0, +flip);
            return;
        case GateKind::R_X:
            apply_rotation(p, ma, 0, -flip);
            return;
        case GateKind::X:
            apply_pauli(p, a, true, false);
            return;
        case GateKind::Y:
            apply_pauli(p, a, true, true);
            return;
        case GateKind::Z:
            apply_pauli(p, a, false, true);
            return;
        case GateKind::CNOT:
            apply_cnot(p, a, b);
            return;
        case GateKind::CZ:
            apply_h(p, b);
            apply_cnot(p, a, b);
            apply_h(p, b);
            return;
        case GateKind::SWAP: {
            uint64_t xa = (p.xs >> a) & 1, za = (p.zs >> a) & 1;
            uint64_t xb = (p.xs >> b) & 1, zb = (p.zs >> b) & 1;
            p.xs = (p.xs & ~(ma | mb)) | (xa << b) | (xb << a);
            p.zs = (p.zs & ~(ma | mb)) | (za << b) | (zb << a);
            return;
        }
        case GateKind::XX:
            apply_rotation(p, ma | mb, 0, +flip);
            return;
        case GateKind::YY:
            apply_rotation(p, ma | mb, ma | mb, -flip);
            return;
        case GateKind::ZZ:
            apply_rotation(p, 0, ma | mb, -flip);
            return;
        default:
            throw std::invalid_argument("Unsupported gate for Pauli conjugation: " + std::string(gi.name));
    }
}

}  // namespace

Gate::Gate(GateKind k, size_t q0) : kind(k), targets{check_qubit(q0), 0, 0} {
    if (gate_arity(k) != 1) {
        throw std::invalid_argument("Gate " + std::string(gate_name(k)) + " needs " +
                                    std::to_string(gate_arity(k)) + " targets");
    }
}

Gate::Gate(GateKind k, size_t q0, size_t q1) : kind(k), targets{check_qubit(q0), check_qubit(q1), 0} {
    if (gate_arity(k) != 2) {
        throw std::invalid_argument("Gate " + std::string(gate_name(k)) + " needs " +
                                    std::to_string(gate_arity(k)) + " targets");
    }
    if (q0 == q1) {
        throw std::invalid_argument("Two qubit gate " + std::string(gate_name(k)) + " on a repeated qubit");
    }
}

Gate::Gate(GateKind k, size_t q0, size_t q1, size_t q2)
    : kind(k), targets{check_qubit(q0), check_qubit(q1), check_qubit(q2)} {
    if (gate_arity(k) != 3) {
        throw std::invalid_argument("Gate " + std::string(gate_name(k)) + " needs " +
                                    std::to_string(gate_arity(k)) + " targets");
    }
    if (q0 == q1 || q0 == q2 || q1 == q2) {
        throw std::invalid_argument("Three qubit gate on a repeated qubit");
    }
}

size_t Gate::arity() const {
    return gate_arity(kind);
}

std::vector<size_t> Gate::qubits() const {
    std::vector<size_t> r;
    for (size_t k = 0; k < arity(); k++) {
        r.push_back(targets[k]);
    }
    return r;
}

uint64_t Gate::support_mask() const {
    uint64_t m = 0;
    for (size_t k = 0; k < arity(); k++) {
        m |= uint64_t{1} << targets[k];
    }
    return m;
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind) {
        return false;
    }
    for (size_t k = 0; k < arity(); k++) {
        if (targets[k] != other.targets[k]) {
            return false;
        }
    }
    return true;
}

std::string Gate::str() const {
    std::string out(gate_name(kind));
    for (size_t k = 0; k < arity(); k++) {
        out += ' ';
        out += std::to_string(targets[k]);
    }
    return out;
}

size_t gate_arity(GateKind kind) {
    return info(kind).arity;
}

bool is_clifford(GateKind kind) {
    return info(kind).clifford;
}

std::string_view gate_name(GateKind kind) {
    return info(kind).name;
}

GateKind gate_kind_from_name(std::string_view name) {
    for (size_t k = 0; k < NUM_GATE_KINDS; k++) {
        if (GATE_INFO[k].name == name) {
            return static_cast<GateKind>(k);
        }
    }
    if (name == "CX") {
        return GateKind::CNOT;
    }
    if (name == "SDG" || name == "S_DAGGER") {
        return GateKind::S_DAG;
    }
    if (name == "TDG" || name == "T_DAGGER") {
        return GateKind::T_DAG;
    }
    if (name == "RX") {
        return GateKind::R_X;
    }
    throw std::invalid_argument("Unknown gate name '" + std::string(name) + "'");
}

const std::vector<GateKind> &all_gate_kinds() {
    static const std::vector<GateKind> kinds = [] {
        std::vector<GateKind> r;
        for (size_t k = 0; k < NUM_GATE_KINDS; k++) {
            r.push_back(static_cast<GateKind>(k));
        }
        return r;
    }();
    return kinds;
}

void conjugate_in_place(const Gate &g, PauliString &p) {
    conjugate_impl(g, p, false);
}

PauliString conjugate(const Gate &g, const PauliString &p) {
    PauliString r = p;
    conjugate_impl(g, r, false);
    return r;
}

PauliString conjugate_inverse(const Gate &g, const PauliString &p) {
    PauliString r = p;
    conjugate_impl(g, r, true);
    return r;
}

}  // namespace cs832
