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

#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cs832/builders.h"
#include "cs832/gadgets.h"
#include "cs832/protocol.h"
#include "cs832/statevec.h"
#include "cs832/tableau.h"
#include "reduced_lists.h"

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

std::vector<size_t> range(size_t lo, size_t hi) {
    std::vector<size_t> out;
    for (size_t q = lo; q < hi; q++) {
        out.push_back(q);
    }
    return out;
}

// Runs `c` noiselessly with several seeds and checks that the first
// `ops[0].n` qubits are stabilized by every operator in `ops`.
void expect_stabilized(const Circuit &c, const std::vector<PauliString> &ops, const std::string &what) {
    for (uint64_t seed = 0; seed < 6; seed++) {
        StabilizerState s(c.num_qubits(), seed);
        ExecutionResult r = run_on_tableau(c, s);
        ASSERT_FALSE(r.discarded) << what;
        for (const auto &op : ops) {
            EXPECT_EQ(s.peek(op.embedded(c.num_qubits(), range(0, op.n))), 1) << what << " seed " << seed << " " << op;
        }
    }
}

std::set<size_t> touched_qubits(const Circuit &c) {
    std::set<size_t> out;
    for (const Op &op : c.ops()) {
        for (size_t q : op.qubits()) {
            out.insert(q);
        }
    }
    return out;
}

std::vector<Gate> gates_of(const Circuit &c) {
    std::vector<Gate> out;
    for (const Op &op : c.ops()) {
        if (op.kind == OpKind::GATE) {
            out.push_back(op.gate);
        }
    }
    return out;
}

}  // namespace

TEST(circuits, ghz_examples) {
    expect_stabilized(build_ghz(8, false, false),
                      Ps({"X0X1X2X3X4X5X6X7", "Z0Z1", "Z0Z2", "Z0Z3", "Z0Z4", "Z0Z5", "Z0Z6", "Z0Z7"}), "ghz8");
    expect_stabilized(build_ghz(4, true, false), Ps({"Z0Z1Z2Z3", "X0X1", "X0X2", "X0X3"}, 4), "dual ghz4");
    expect_stabilized(build_ghz(8, false, true),
                      Ps({"X0X1X2X3X4X5X6X7", "Z0Z1", "Z0Z2", "Z0Z3", "Z0Z4", "Z0Z5", "Z0Z6", "Z0Z7"}), "ghz8 ft");
    EXPECT_THROW(build_ghz(1, false, false), std::invalid_argument);
    Circuit ft = build_ghz(8, false, true);
    EXPECT_EQ(ft.count(OpKind::DISCARD_IF), 1u);
    EXPECT_EQ(ft.ancillas().size(), 1u);
}

TEST(circuits, preparations_reach_reduced_lists) {
    for (const auto &list : expected_reduced_lists()) {
        std::vector<PauliString> original, reduced;
        for (const auto &[o, r] : list.rows) {
            original.push_back(P(o.c_str()));
            reduced.push_back(P(r.c_str()));
        }
        EXPECT_EQ(canonicalize(original), canonicalize(reduced)) << list.name;
        if (list.final_state) {
            expect_stabilized(build_state_prep(list.version, list.state), reduced, list.name);
        }
    }
}

TEST(circuits, every_preparation_reaches_its_code_state) {
    for (CodeVersion v : {CodeVersion::V1, CodeVersion::V2}) {
        CodeDefinition code = code_for(v);
        for (LogicalState st : {LogicalState::ZERO_ZERO_ZERO, LogicalState::PLUS_PLUS_PLUS,
                                LogicalState::PLUS_PLUS_ZERO, LogicalState::ZERO_ZERO_PLUS}) {
            std::string label = logical_state_label(st);
            std::vector<PauliString> ops = code.stabilizers;
            for (size_t j = 0; j < 3; j++) {
                ops.push_back(label[j] == '0' ? code.logical_z[j] : code.logical_x[j]);
            }
            expect_stabilized(build_state_prep(v, st), ops, version_name(v) + " " + label);
        }
    }
}

TEST(circuits, product_structure_of_version1_zero_state) {
    // GHZ on {0,1,2,4} times dual GHZ on {3,5,6,7}.
    expect_stabilized(build_state_prep(CodeVersion::V1, LogicalState::ZERO_ZERO_ZERO),
                      Ps({"X0X1X2X4", "Z0Z1", "Z0Z2", "Z0Z4", "Z3Z5Z6Z7", "X3X5", "X3X6", "X3X7"}), "v1 000");
}

TEST(circuits, gauge_measurement_layouts) {
    Circuit gz4 = build_gauge_measurement(P("Z0Z1Z2Z3"), true);
    EXPECT_EQ(touched_qubits(gz4).size(), 6u);
    std::vector<const Op *> gates;
    for (const Op &op : gz4.ops()) {
        if (op.kind == OpKind::GATE && op.gate.kind == GateKind::CNOT) {
            gates.push_back(&op);
        }
    }
    size_t anc = gz4.ancillas().at(0), flag = gz4.flags().at(0);
    std::vector<char> pattern;
    for (const Op *op : gates) {
        auto qs = op->gate.qubits();
        pattern.push_back(qs[1] == anc && qs[0] != flag ? 'd' : 'f');
    }
    // Data couplings with flag couplings after the first and before the last.
    EXPECT_EQ(std::string(pattern.begin(), pattern.end()), "dfddfd");
    EXPECT_EQ(gz4.count(OpKind::DISCARD_IF), 1u);

    Circuit gx4 = build_gauge_measurement(P("X7X3"), false);
    EXPECT_EQ(touched_qubits(gx4).size(), 3u);
    EXPECT_TRUE(gx4.flags().empty() || touched_qubits(gx4).count(gx4.flags()[0]) == 0);
    size_t cnots = 0;
    for (const Op &op : gx4.ops()) {
        if (op.kind == OpKind::GATE && op.gate.kind == GateKind::CNOT) {
            EXPECT_EQ(op.gate.qubits()[0], gx4.ancillas().at(0));
            cnots++;
        }
    }
    EXPECT_EQ(cnots, 2u);
    EXPECT_THROW(build_gauge_measurement(P("X0Z1"), false), std::invalid_argument);
    EXPECT_THROW(build_gauge_measurement(P("Z0"), false), std::invalid_argument);
}

TEST(circuits, flag_catches_hook_errors) {
    for (bool flagged : {true, false}) {
        Circuit c = build_state_prep(CodeVersion::V2, LogicalState::PLUS_PLUS_PLUS);
        c.make_noiseless();
        Circuit m = block_circuit();
        append_pauli_measurement(m, P("Z0Z1Z2Z3").embedded(m.num_qubits(), range(0, 8)), block_ancilla(m, 0),
                                 flagged ? std::optional<size_t>(block_flag(m)) : std::nullopt, "g");
        m.discard_if({{"g"}});
        c.append(m);
        FaultReport r = enumerate_faults(c, prep_reference(CodeVersion::V2, LogicalState::PLUS_PLUS_PLUS));
        if (flagged) {
            EXPECT_EQ(r.logical_failures.size(), 0u);
        } else {
            EXPECT_GT(r.logical_failures.size(), 0u);
        }
    }
}

TEST(circuits, gadget_recoveries) {
    EXPECT_EQ(table_recovery(GateKind::ZZ, AncillaState::BELL), PauliString::from_dense("ZIZI"));
    EXPECT_EQ(table_recovery(GateKind::XX, AncillaState::PLUS_PLUS), PauliString::from_dense("YIYI"));
    for (GateKind rot : {GateKind::XX, GateKind::ZZ}) {
        for (AncillaState in : {AncillaState::BELL, AncillaState::PLUS_PLUS}) {
            GadgetVariant v = gadget_variant(rot, in);
            if (rot == GateKind::ZZ && in == AncillaState::PLUS_PLUS) {
                continue;
            }
            EXPECT_TRUE(recoveries_equivalent(v.recovery, table_recovery(rot, in), v.output())) << v.name();
        }
    }
}

// Each gadget, run noiselessly on random two qubit data states, applies its
// rotation to the data.
TEST(circuits, gadgets_apply_rotation_on_random_inputs) {
    std::mt19937_64 rng(9);
    std::vector<GateKind> prep_kinds = {GateKind::H, GateKind::S, GateKind::CNOT, GateKind::SQRT_X_DAG};
    for (GateKind rot : {GateKind::XX, GateKind::ZZ}) {
        for (AncillaState in : {AncillaState::BELL, AncillaState::PLUS_PLUS}) {
            GadgetVariant v = gadget_variant(rot, in);
            Circuit c = build_rotation_gadget(v, 3, 5);
            for (int t = 0; t < 10; t++) {
                std::vector<Gate> prep;
                for (int k = 0; k < 6; k++) {
                    GateKind kind = prep_kinds[rng() % prep_kinds.size()];
                    size_t a = rng() & 1;
                    prep.push_back(kind == GateKind::CNOT ? Gate(kind, a, 1 - a) : Gate(kind, a));
                }
                StateVector want(2);
                StateVector s(c.num_qubits());
                for (Gate g : prep) {
                    want.apply(g);
                    std::vector<size_t> qs = g.qubits();
                    s.apply(qs.size() == 1 ? Gate(g.kind, qs[0] == 0 ? 3 : 5)
                                           : Gate(g.kind, qs[0] == 0 ? 3 : 5, qs[1] == 0 ? 3 : 5));
                }
                want.apply(Gate(rot, 0, 1));
                ExecutionResult r = run_on_statevec(c, s, rng);
                ASSERT_FALSE(r.discarded) << v.name();
                for (uint64_t x = 0; x < 4; x++) {
                    for (uint64_t z = 0; z < 4; z++) {
                        PauliString p2 = PauliString::from_masks(2, x, z);
                        PauliString pn = p2.embedded(c.num_qubits(), {3, 5});
                        EXPECT_NEAR(s.expectation(pn), want.expectation(p2), 1e-9) << v.name() << " " << p2;
                    }
                }
            }
        }
    }
}

TEST(circuits, hadamard_gadget_pairs) {
    // H on logical j uses the data qubit q of its weight two X logical.
    size_t qs[] = {4, 2, 1};
    for (size_t j = 1; j <= 3; j++) {
        LogicalGateSpec h = find_logical_gate(CodeVersion::V1, "H" + std::to_string(j));
        ASSERT_EQ(h.realization, Realization::GADGETS);
        ASSERT_EQ(h.gadgets.size(), 3u);
        size_t q = qs[j - 1];
        EXPECT_EQ(h.gadgets[0].rotation, GateKind::ZZ);
        EXPECT_EQ(h.gadgets[1].rotation, GateKind::XX);
        EXPECT_EQ(h.gadgets[2].rotation, GateKind::ZZ);
        EXPECT_EQ(std::set<size_t>({h.gadgets[0].data, h.gadgets[0].shared}), std::set<size_t>({q, 0}));
        EXPECT_EQ(std::set<size_t>({h.gadgets[1].data, h.gadgets[1].shared}), std::set<size_t>({q, 6}));
        EXPECT_EQ(h.byproduct.weight(), 3u);
    }
    EXPECT_THROW(build_logical_hadamard(0), std::invalid_argument);
    EXPECT_THROW(build_logical_hadamard(4), std::invalid_argument);
}

TEST(circuits, interblock_logical_action) {
    for (InterblockKind kind : {InterblockKind::PARALLEL_CNOT, InterblockKind::FIG3, InterblockKind::SMALLEST,
                                InterblockKind::ALT, InterblockKind::CZ}) {
        size_t built = 0;
        for (CodeVersion b1 : {CodeVersion::V1, CodeVersion::V2}) {
            for (CodeVersion b2 : {CodeVersion::V1, CodeVersion::V2}) {
                for (size_t i = 1; i <= 3; i++) {
                    for (size_t j = 1; j <= 3; j++) {
                        Circuit c;
                        try {
                            c = build_interblock(kind, b1, b2, i, j);
                        } catch (const std::invalid_argument &) {
                            continue;
                        }
                        built++;
                        CodeDefinition c1 = code_for(b1), c2 = code_for(b2);
                        auto stabs = joint_stabilizers(c1, c2);
                        auto lx = joint_logicals_x(c1, c2);
                        auto lz = joint_logicals_z(c1, c2);
                        auto image = [&](PauliString p) {
                            p = p.embedded(c.num_qubits(), range(0, 16));
                            for (const Gate &g : gates_of(c)) {
                                p = conjugate(g, p);
                            }
                            return p.restricted(range(0, 16));
                        };
                        // Expected images: logical k of block b is index
                        // 3 * b + k - 1.
                        std::vector<PauliString> want_x = lx, want_z = lz;
                        if (kind == InterblockKind::PARALLEL_CNOT) {
                            for (size_t k = 0; k < 3; k++) {
                                want_x[k] = lx[k] * lx[3 + k];
                                want_z[3 + k] = lz[k] * lz[3 + k];
                            }
                        } else if (kind == InterblockKind::CZ) {
                            want_x[i - 1] = lx[i - 1] * lz[2 + j];
                            want_x[2 + j] = lz[i - 1] * lx[2 + j];
                        } else {
                            want_x[i - 1] = lx[i - 1] * lx[2 + j];
                            want_z[2 + j] = lz[i - 1] * lz[2 + j];
                        }
                        for (size_t k = 0; k < 6; k++) {
                            for (auto [in, want] : {std::pair{lx[k], want_x[k]}, std::pair{lz[k], want_z[k]}}) {
                                PauliString prod = (image(in) * want).unsigned_part();
                                EXPECT_TRUE(prod.is_identity() || group_sign(stabs, prod).has_value())
                                    << interblock_kind_name(kind) << " " << version_name(b1) << "->"
                                    << version_name(b2) << " (" << i << "," << j << ") " << in;
                            }
                        }
                        for (const auto &s : stabs) {
                            EXPECT_TRUE(group_sign(stabs, image(s)).has_value()) << interblock_kind_name(kind);
                        }
                        if (kind == InterblockKind::PARALLEL_CNOT) {
                            break;
                        }
                    }
                    if (kind == InterblockKind::PARALLEL_CNOT) {
                        break;
                    }
                }
            }
        }
        EXPECT_GT(built, 0u) << interblock_kind_name(kind);
    }
    EXPECT_THROW(build_interblock(InterblockKind::PARALLEL_CNOT, CodeVersion::V1, CodeVersion::V2, 1, 1),
                 std::invalid_argument);
}

TEST(circuits, bare_grover_finds_marked_items) {
    Circuit c = build_grover(false);
    std::mt19937_64 rng(1);
    std::map<std::string, int> counts;
    for (int t = 0; t < 10000; t++) {
        StateVector s(c.num_qubits());
        ExecutionResult r = run_on_statevec(c, s, rng);
        counts[*decode_grover(r.record, false)]++;
    }
    EXPECT_EQ(counts["101"] + counts["011"], 10000);
    EXPECT_GT(counts["101"], 4000);
    EXPECT_GT(counts["011"], 4000);
}

TEST(circuits, encoded_grover_finds_marked_items) {
    Circuit c = build_grover(true);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; t++) {
        StateVector s(c.num_qubits());
        ExecutionResult r = run_on_statevec(c, s, rng);
        ASSERT_FALSE(r.discarded);
        auto bits = decode_grover(r.record, true);
        ASSERT_TRUE(bits.has_value());
        EXPECT_TRUE(*bits == "101" || *bits == "011") << *bits;
    }
}

TEST(circuits, text_round_trip) {
    std::vector<Circuit> cs = {build_ghz(8, false, true), build_switch(SwitchDirection::V1_TO_V2),
                               build_switch(SwitchDirection::V2_TO_V1), build_logical_hadamard(2),
                               build_grover(true)};
    for (CodeVersion v : {CodeVersion::V1, CodeVersion::V2}) {
        for (LogicalState st : {LogicalState::ZERO_ZERO_ZERO, LogicalState::PLUS_PLUS_PLUS,
                                LogicalState::PLUS_PLUS_ZERO, LogicalState::ZERO_ZERO_PLUS}) {
            cs.push_back(build_state_prep(v, st));
        }
    }
    for (const Circuit &c : cs) {
        EXPECT_EQ(Circuit::from_text(c.to_text()), c);
    }
}

TEST(circuits, well_formedness_is_checked_on_append) {
    Circuit c(2);
    size_t a = c.add_ancilla();
    c.measure('Z', a, "m");
    EXPECT_THROW(c.gate(GateKind::CNOT, size_t(0), a), std::invalid_argument);
    EXPECT_THROW(c.measure('Z', 0, "m"), std::invalid_argument);
    EXPECT_THROW(c.discard_if({{"later"}}), std::invalid_argument);
    EXPECT_THROW(c.gate(GateKind::H, size_t(9)), std::invalid_argument);
    c.reset('Z', a);
    EXPECT_NO_THROW(c.gate(GateKind::CNOT, size_t(0), a));
}

// Golden circuit files freeze the gate order of every builder. Set
// CS832_UPDATE_GOLDEN=1 to rewrite them after an intended change.
TEST(circuits, golden_files) {
    std::map<std::string, Circuit> named = {
        {"ghz8_ft", build_ghz(8, false, true)},
        {"switch_1to2", build_switch(SwitchDirection::V1_TO_V2)},
        {"switch_2to1", build_switch(SwitchDirection::V2_TO_V1)},
        {"hadamard_h1", build_logical_hadamard(1)},
        {"grover_bare", build_grover(false)},
        {"grover_encoded", build_grover(true)},
    };
    for (CodeVersion v : {CodeVersion::V1, CodeVersion::V2}) {
        for (LogicalState st : {LogicalState::ZERO_ZERO_ZERO, LogicalState::PLUS_PLUS_PLUS,
                                LogicalState::PLUS_PLUS_ZERO, LogicalState::ZERO_ZERO_PLUS}) {
            std::string label = logical_state_label(st);
            for (char &ch : label) {
                ch = ch == '+' ? 'p' : ch;
            }
            named.emplace("prep_" + version_name(v) + "_" + label, build_state_prep(v, st));
        }
    }
    bool update = std::getenv("CS832_UPDATE_GOLDEN") != nullptr;
    for (const auto &[name, c] : named) {
        std::string path = std::string(CS832_GOLDEN_DIR) + "/" + name + ".txt";
        if (update) {
            std::ofstream(path) << c.to_text();
            continue;
        }
        std::ifstream in(path);
        ASSERT_TRUE(in.good()) << "missing golden file " << path;
        std::stringstream buf;
        buf << in.rdbuf();
        EXPECT_EQ(buf.str(), c.to_text()) << name;
    }
}
