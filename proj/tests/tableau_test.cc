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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cs832/builders.h"
#include "cs832/protocol.h"
#include "cs832/statevec.h"
#include "cs832/tableau.h"

using namespace cs832;

namespace {

PauliString P(const char *s, size_t n = 8) {
    return PauliString::from_str(s, n);
}

std::vector<PauliString> Ps(std::initializer_list<const char *> ss, size_t n = 8) {
    std::vector<PauliString> out;
    for (auto s : ss) {
        out.push_back(P(s, n));
    }
    return out;
}

std::vector<PauliString> data_group(const Reference &r) {
    std::vector<PauliString> out;
    for (const auto *list : {&r.stabilizers, &r.logicals}) {
        for (const auto &p : *list) {
            out.push_back(p.restricted({0, 1, 2, 3, 4, 5, 6, 7}));
        }
    }
    return out;
}

Gate random_clifford_gate(size_t n, std::mt19937_64 &rng) {
    std::vector<GateKind> kinds;
    for (GateKind k : all_gate_kinds()) {
        if (is_clifford(k) && (gate_arity(k) == 1 || n >= 2)) {
            kinds.push_back(k);
        }
    }
    GateKind k = kinds[rng() % kinds.size()];
    size_t a = rng() % n;
    if (gate_arity(k) == 1) {
        return Gate(k, a);
    }
    size_t b = (a + 1 + rng() % (n - 1)) % n;
    return Gate(k, a, b);
}

}  // namespace

TEST(tableau, hadamard_turns_z_into_x) {
    StabilizerState s(1);
    s.apply_gate(Gate(GateKind::H, 0));
    EXPECT_EQ(s.stabilizers()[0], P("X0", 1));
    s.check_invariants();
}

TEST(tableau, ghz_fan_out) {
    StabilizerState s(8);
    s.apply_gate(Gate(GateKind::H, 0));
    for (size_t q = 1; q < 8; q++) {
        s.apply_gate(Gate(GateKind::CNOT, 0, q));
    }
    EXPECT_TRUE(same_group(s.stabilizers(), Ps({"X0X1X2X3X4X5X6X7", "Z0Z1", "Z0Z2", "Z0Z3", "Z0Z4", "Z0Z5", "Z0Z6",
                                                "Z0Z7"})));
    EXPECT_EQ(s.measure(P("Z0Z1Z2Z3Z4Z5Z6Z7")), 1);
    StabilizerState before = s;
    s.measure(P("Z0Z1Z2Z3Z4Z5Z6Z7"));
    EXPECT_EQ(s.canonical_stabilizers(), before.canonical_stabilizers());

    s.inject_error(P("Z0"));
    EXPECT_EQ(s.peek(P("X0X1X2X3X4X5X6X7")), -1);
    for (size_t q = 1; q < 8; q++) {
        EXPECT_EQ(s.peek(PauliString::on(8, {0, q}, 'Z')), 1);
    }
}

TEST(tableau, version2_swap_permutation_preserves_group) {
    StabilizerState s(8);
    for (const auto &p : code_for(CodeVersion::V2).stabilizers) {
        s.measure_forced(p, 1);
    }
    auto before = s.canonical_stabilizers();
    for (const Gate &g : permutation_to_swaps({4, 5, 0, 1, 6, 7, 2, 3})) {
        s.apply_gate(g);
    }
    std::vector<PauliString> stabs = code_for(CodeVersion::V2).stabilizers;
    for (const auto &p : stabs) {
        EXPECT_EQ(s.peek(p), 1) << p;
    }
    EXPECT_EQ(s.canonical_stabilizers().size(), before.size());
}

TEST(tableau, random_and_repeated_measurement) {
    Reference r = prep_reference(CodeVersion::V1, LogicalState::PLUS_PLUS_PLUS);
    StabilizerState s(8, 11);
    for (const auto &p : data_group(r)) {
        s.measure_forced(p, p.sign() == -1 ? -1 : 1);
    }
    PauliString g4 = P("Z0Z1Z2Z3");
    EXPECT_FALSE(commutes(g4, P("X7X3")));
    EXPECT_FALSE(s.peek(g4).has_value());
    int counts[2] = {0, 0};
    for (uint64_t seed = 0; seed < 200; seed++) {
        StabilizerState t(8, seed);
        for (const auto &p : data_group(r)) {
            t.measure_forced(p, 1);
        }
        int m = t.measure(g4);
        counts[m == 1]++;
        EXPECT_EQ(t.measure(g4), m);
    }
    EXPECT_GT(counts[0], 60);
    EXPECT_GT(counts[1], 60);
}

TEST(tableau, measure_rejects_non_hermitian) {
    StabilizerState s(2);
    EXPECT_THROW(s.measure(P("iX0", 2)), std::invalid_argument);
}

TEST(tableau, deterministic_given_seed) {
    for (uint64_t seed : {1u, 2u}) {
        StabilizerState a(4, seed), b(4, seed);
        for (size_t q = 0; q < 4; q++) {
            a.apply_gate(Gate(GateKind::H, q));
            b.apply_gate(Gate(GateKind::H, q));
        }
        for (size_t q = 0; q < 4; q++) {
            EXPECT_EQ(a.measure(PauliString::single(4, q, 'Z')), b.measure(PauliString::single(4, q, 'Z')));
        }
    }
}

TEST(tableau, agrees_with_state_vector_on_random_circuits) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + rng() % 6;
        StabilizerState tab(n, t);
        StateVector sv(n);
        size_t depth = 5 + rng() % 30;
        for (size_t d = 0; d < depth; d++) {
            Gate g = random_clifford_gate(n, rng);
            tab.apply_gate(g);
            sv.apply(g);
        }
        tab.check_invariants();
        for (const auto &s : tab.stabilizers()) {
            EXPECT_NEAR(sv.expectation(s), 1.0, 1e-9) << "circuit " << t << " stabilizer " << s;
        }
        // Random Paulis: +-1 exactly when determined, 0 otherwise.
        for (int k = 0; k < 10; k++) {
            PauliString p(n);
            for (size_t q = 0; q < n; q++) {
                p.set(q, "IXYZ"[rng() & 3]);
            }
            auto v = tab.peek(p);
            EXPECT_NEAR(sv.expectation(p), v ? double(*v) : 0.0, 1e-9) << p;
        }
    }
}

TEST(tableau, inject_error_flips_anticommuting_signs) {
    StabilizerState s(3);
    s.apply_gate(Gate(GateKind::H, 0));
    s.apply_gate(Gate(GateKind::CNOT, 0, 1));
    s.apply_gate(Gate(GateKind::CNOT, 0, 2));
    s.inject_error(P("X1", 3));
    EXPECT_EQ(s.peek(P("Z0Z1", 3)), -1);
    EXPECT_EQ(s.peek(P("Z0Z2", 3)), 1);
    EXPECT_EQ(s.peek(P("X0X1X2", 3)), 1);
}

TEST(canonicalize, same_group_examples) {
    EXPECT_TRUE(same_group(Ps({"Z0", "Z1"}, 2), Ps({"Z0Z1", "Z1"}, 2)));
    EXPECT_FALSE(same_group(Ps({"Z0"}, 1), Ps({"-Z0"}, 1)));
    EXPECT_THROW(canonicalize(Ps({"X0", "Z0"}, 1)), std::invalid_argument);
    EXPECT_THROW(canonicalize(Ps({"Z0", "Z1", "Z0Z1"}, 2)), std::invalid_argument);
    EXPECT_THROW(canonicalize(Ps({"iZ0"}, 1)), std::invalid_argument);
}

TEST(canonicalize, idempotent_and_basis_independent) {
    std::mt19937_64 rng(5);
    auto base = code_for(CodeVersion::V2).stabilizers;
    auto canon = canonicalize(base);
    EXPECT_EQ(canonicalize(canon), canon);
    for (int t = 0; t < 50; t++) {
        auto shuffled = base;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (size_t i = 0; i < shuffled.size(); i++) {
            size_t j = rng() % shuffled.size();
            if (j != i) {
                shuffled[i] *= shuffled[j];
            }
        }
        EXPECT_EQ(canonicalize(shuffled), canon);
    }
}

TEST(canonicalize, version1_presentations_agree) {
    // Version 1 written as in its definition and as the subsystem code with
    // every gauge X fixed.
    auto direct = Ps({"X0X1X2X3X4X5X6X7", "Z0Z1Z2Z3Z4Z5Z6Z7", "X7X3", "X7X5", "X7X6"});
    CodeDefinition sub = subsystem_code();
    std::vector<PauliString> fixed = sub.stabilizers;
    for (const auto &g : sub.gauge_x) {
        fixed.push_back(g);
    }
    EXPECT_TRUE(same_group(direct, fixed));
}

TEST(canonicalize, group_sign) {
    auto g = Ps({"Z0Z1", "-Z1Z2", "X0X1X2"}, 3);
    EXPECT_EQ(group_sign(g, P("Z0Z2", 3)), -1);
    EXPECT_EQ(group_sign(g, P("-Z0Z2", 3)), 1);
    EXPECT_FALSE(group_sign(g, P("Z0", 3)).has_value());
}
