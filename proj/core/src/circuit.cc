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

#include "cs832/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cs832 {

namespace {

std::vector<std::string> split_words(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    std::string w;
    while (in >> w) {
        words.push_back(w);
    }
    return words;
}

size_t parse_index(const std::string &word, size_t line_no) {
    size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(word, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != word.size()) {
        throw std::invalid_argument("Line " + std::to_string(line_no) + ": expected a qubit index, got '" + word + "'");
    }
    return v;
}

char parse_basis(const std::string &word, size_t line_no) {
    if (word != "X" && word != "Z") {
        throw std::invalid_argument("Line " + std::to_string(line_no) + ": unknown basis '" + word + "'");
    }
    return word[0];
}

// Reads "a ^ b ^ c" starting at word k.
Condition parse_condition(const std::vector<std::string> &words, size_t k, size_t line_no) {
    Condition c;
    bool want_label = true;
    for (; k < words.size(); k++) {
        if (want_label) {
            c.labels.push_back(words[k]);
        } else if (words[k] != "^") {
            throw std::invalid_argument("Line " + std::to_string(line_no) + ": expected '^' in condition");
        }
        want_label = !want_label;
    }
    if (c.labels.empty() || want_label) {
        throw std::invalid_argument("Line " + std::to_string(line_no) + ": malformed condition");
    }
    return c;
}

}  // namespace

bool Condition::evaluate(const MeasurementRecord &record) const {
    bool parity = false;
    for (const auto &l : labels) {
        parity ^= record.get(l) == -1;
    }
    return parity;
}

std::string Condition::str() const {
    std::string out;
    for (size_t k = 0; k < labels.size(); k++) {
        if (k) {
            out += " ^ ";
        }
        out += labels[k];
    }
    return out;
}

bool Condition::operator==(const Condition &other) const {
    return labels == other.labels;
}

std::string Op::str() const {
    switch (kind) {
        case OpKind::GATE:
            return gate.str() + (noiseless ? " NOISELESS" : "");
        case OpKind::MEASURE:
            return std::string("M ") + basis + " " + std::to_string(qubit) + " " + label;
        case OpKind::RESET:
            return std::string("R ") + basis + " " + std::to_string(qubit);
        case OpKind::CORRECT:
            return "CORR " + pauli.str() + (condition.labels.empty() ? "" : " IF " + condition.str());
        case OpKind::DISCARD_IF:
            return "DISCARD_IF " + condition.str();
    }
    return "";
}

std::vector<size_t> Op::qubits() const {
    switch (kind) {
        case OpKind::GATE:
            return gate.qubits();
        case OpKind::MEASURE:
        case OpKind::RESET:
            return {qubit};
        default:
            return {};
    }
}

bool Op::operator==(const Op &other) const {
    return str() == other.str();
}

Circuit::Circuit(size_t num_data) {
    for (size_t q = 0; q < num_data; q++) {
        data_.push_back(add_qubit());
    }
}

size_t Circuit::add_qubit() {
    if (num_qubits_ >= MAX_PAULI_QUBITS) {
        throw std::invalid_argument("Circuit capacity exceeded: at most 64 qubits");
    }
    stale_.push_back(false);
    return num_qubits_++;
}

size_t Circuit::add_ancilla() {
    size_t q = add_qubit();
    ancillas_.push_back(q);
    return q;
}

size_t Circuit::add_flag() {
    size_t q = add_qubit();
    flags_.push_back(q);
    return q;
}

size_t Circuit::num_qubits() const {
    return num_qubits_;
}

const std::vector<size_t> &Circuit::data() const {
    return data_;
}

const std::vector<size_t> &Circuit::ancillas() const {
    return ancillas_;
}

const std::vector<size_t> &Circuit::flags() const {
    return flags_;
}

const std::vector<Op> &Circuit::ops() const {
    return ops_;
}

bool Circuit::has_label(const std::string &label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

void Circuit::check_qubit(size_t q) const {
    if (q >= num_qubits_) {
        throw std::invalid_argument("Qubit " + std::to_string(q) + " is outside the circuit's " +
                                    std::to_string(num_qubits_) + " qubits");
    }
}

void Circuit::check_condition(const Condition &c) const {
    for (const auto &l : c.labels) {
        if (!has_label(l)) {
            throw std::invalid_argument("Condition references unknown or later label '" + l + "'");
        }
    }
}

void Circuit::touch(size_t q) {
    check_qubit(q);
    if (stale_[q]) {
        throw std::invalid_argument("Qubit " + std::to_string(q) + " is used after measurement without a reset");
    }
}

void Circuit::gate(const Gate &g, bool noiseless) {
    auto qs = g.qubits();
    for (size_t k = 0; k < qs.size(); k++) {
        touch(qs[k]);
        for (size_t j = 0; j < k; j++) {
            if (qs[j] == qs[k]) {
                throw std::invalid_argument("Gate " + g.str() + " repeats a target");
            }
        }
    }
    Op op;
    op.kind = OpKind::GATE;
    op.gate = g;
    op.noiseless = noiseless;
    ops_.push_back(op);
}

void Circuit::gate(GateKind k, size_t q0, bool noiseless) {
    gate(Gate(k, q0), noiseless);
}

void Circuit::gate(GateKind k, size_t q0, size_t q1, bool noiseless) {
    gate(Gate(k, q0, q1), noiseless);
}

void Circuit::measure(char basis, size_t q, const std::string &label) {
    check_qubit(q);
    if (basis != 'X' && basis != 'Z') {
        throw std::invalid_argument(std::string("Unknown measurement basis '") + basis + "'");
    }
    if (label.empty() || label.find_first_of(" \t^") != std::string::npos) {
        throw std::invalid_argument("Invalid measurement label '" + label + "'");
    }
    if (has_label(label)) {
        throw std::invalid_argument("Duplicate measurement label '" + label + "'");
    }
    Op op;
    op.kind = OpKind::MEASURE;
    op.basis = basis;
    op.qubit = q;
    op.label = label;
    ops_.push_back(op);
    labels_.push_back(label);
    // Data qubits may be read out and then left alone; ancillas and flags
    // must be reset before reuse.
    if (std::find(data_.begin(), data_.end(), q) == data_.end()) {
        stale_[q] = true;
    }
}

void Circuit::reset(char basis, size_t q) {
    check_qubit(q);
    if (basis != 'X' && basis != 'Z') {
        throw std::invalid_argument(std::string("Unknown reset basis '") + basis + "'");
    }
    Op op;
    op.kind = OpKind::RESET;
    op.basis = basis;
    op.qubit = q;
    ops_.push_back(op);
    stale_[q] = false;
}

void Circuit::correct(const PauliString &p, Condition condition) {
    if (p.n != num_qubits_) {
        throw std::invalid_argument("Correction " + p.str() + " does not match the circuit size");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("Correction " + p.str() + " is not Hermitian");
    }
    check_condition(condition);
    Op op;
    op.kind = OpKind::CORRECT;
    op.pauli = p;
    op.condition = std::move(condition);
    ops_.push_back(op);
}

void Circuit::discard_if(Condition condition) {
    if (condition.labels.empty()) {
        throw std::invalid_argument("DISCARD_IF needs at least one label");
    }
    check_condition(condition);
    Op op;
    op.kind = OpKind::DISCARD_IF;
    op.condition = std::move(condition);
    ops_.push_back(op);
}

void Circuit::append(const Circuit &other, const std::vector<size_t> &qubit_map, const std::string &label_prefix) {
    if (qubit_map.size() != other.num_qubits_) {
        throw std::invalid_argument("Qubit map size does not match the appended circuit");
    }
    std::vector<size_t> map64(qubit_map.begin(), qubit_map.end());
    for (size_t q : map64) {
        check_qubit(q);
    }
    auto rename = [&](const Condition &c) {
        Condition r;
        for (const auto &l : c.labels) {
            r.labels.push_back(label_prefix + l);
        }
        return r;
    };
    for (const auto &op : other.ops_) {
        switch (op.kind) {
            case OpKind::GATE: {
                Gate g = op.gate;
                for (size_t k = 0; k < g.arity(); k++) {
                    g.targets[k] = map64[g.targets[k]];
                }
                gate(g, op.noiseless);
                break;
            }
            case OpKind::MEASURE:
                measure(op.basis, map64[op.qubit], label_prefix + op.label);
                break;
            case OpKind::RESET:
                reset(op.basis, map64[op.qubit]);
                break;
            case OpKind::CORRECT:
                correct(op.pauli.embedded(num_qubits_, map64), rename(op.condition));
                break;
            case OpKind::DISCARD_IF:
                discard_if(rename(op.condition));
                break;
        }
    }
}

void Circuit::append(const Circuit &other) {
    std::vector<size_t> id(other.num_qubits_);
    for (size_t q = 0; q < id.size(); q++) {
        id[q] = q;
    }
    append(other, id);
}

void Circuit::make_noiseless() {
    for (auto &op : ops_) {
        op.noiseless = true;
    }
}

bool Circuit::is_clifford() const {
    for (const auto &op : ops_) {
        if (op.kind == OpKind::GATE && !cs832::is_clifford(op.gate.kind)) {
            return false;
        }
    }
    return true;
}

size_t Circuit::count(OpKind kind) const {
    return std::count_if(ops_.begin(), ops_.end(), [&](const Op &op) { return op.kind == kind; });
}

size_t Circuit::count_noisy_gates() const {
    return std::count_if(ops_.begin(), ops_.end(),
                         [](const Op &op) { return op.kind == OpKind::GATE && !op.noiseless; });
}

std::string Circuit::to_text() const {
    std::ostringstream out;
    out << "QUBITS " << num_qubits_ << "\n";
    auto reg = [&](const char *name, const std::vector<size_t> &qs) {
        if (qs.empty()) {
            return;
        }
        out << name;
        for (size_t q : qs) {
            out << " " << q;
        }
        out << "\n";
    };
    reg("DATA", data_);
    reg("ANCILLA", ancillas_);
    reg("FLAG", flags_);
    for (const auto &op : ops_) {
        out << op.str() << "\n";
    }
    return out.str();
}

Circuit Circuit::from_text(const std::string &text) {
    Circuit c;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    bool sized = false;
    std::vector<char> role;
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("Line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        line_no++;
        auto words = split_words(line);
        if (words.empty() || words[0][0] == '#') {
            continue;
        }
        const std::string &head = words[0];
        if (head == "QUBITS") {
            if (sized || words.size() != 2) {
                fail("bad QUBITS line");
            }
            size_t n = parse_index(words[1], line_no);
            for (size_t q = 0; q < n; q++) {
                c.add_qubit();
            }
            role.assign(n, 0);
            sized = true;
            continue;
        }
        if (!sized) {
            fail("QUBITS must come first");
        }
        if (head == "DATA" || head == "ANCILLA" || head == "FLAG") {
            if (!c.ops_.empty()) {
                fail("register lines must precede ops");
            }
            auto &reg = head == "DATA" ? c.data_ : head == "ANCILLA" ? c.ancillas_ : c.flags_;
            for (size_t k = 1; k < words.size(); k++) {
                size_t q = parse_index(words[k], line_no);
                c.check_qubit(q);
                if (role[q]) {
                    fail("qubit " + std::to_string(q) + " is in two registers");
                }
                role[q] = head[0];
                reg.push_back(q);
            }
            continue;
        }
        if (head == "M") {
            if (words.size() != 4) {
                fail("expected 'M basis qubit label'");
            }
            c.measure(parse_basis(words[1], line_no), parse_index(words[2], line_no), words[3]);
        } else if (head == "R") {
            if (words.size() != 3) {
                fail("expected 'R basis qubit'");
            }
            c.reset(parse_basis(words[1], line_no), parse_index(words[2], line_no));
        } else if (head == "CORR") {
            if (words.size() < 2) {
                fail("expected 'CORR pauli [IF condition]'");
            }
            Condition cond;
            if (words.size() > 2) {
                if (words[2] != "IF") {
                    fail("expected IF after the correction Pauli");
                }
                cond = parse_condition(words, 3, line_no);
            }
            c.correct(PauliString::from_str(words[1], c.num_qubits_), cond);
        } else if (head == "DISCARD_IF") {
            c.discard_if(parse_condition(words, 1, line_no));
        } else {
            GateKind kind;
            try {
                kind = gate_kind_from_name(head);
            } catch (const std::invalid_argument &) {
                fail("unknown op '" + head + "'");
            }
            size_t arity = gate_arity(kind);
            bool noiseless = words.back() == "NOISELESS";
            if (words.size() != 1 + arity + (noiseless ? 1 : 0)) {
                fail("gate " + head + " takes " + std::to_string(arity) + " targets");
            }
            std::vector<size_t> t;
            for (size_t k = 0; k < arity; k++) {
                t.push_back(parse_index(words[1 + k], line_no));
            }
            Gate g = arity == 1 ? Gate(kind, t[0]) : arity == 2 ? Gate(kind, t[0], t[1]) : Gate(kind, t[0], t[1], t[2]);
            c.gate(g, noiseless);
        }
    }
    if (!sized) {
        throw std::invalid_argument("Circuit text has no QUBITS line");
    }
    return c;
}

bool Circuit::operator==(const Circuit &other) const {
    return to_text() == other.to_text();
}

namespace {

// Shared driver for both simulators.
template <typename ApplyGate, typename ApplyPauli, typename Measure, typename Reset>
ExecutionResult execute(const Circuit &c, const std::vector<InjectedFault> &faults, bool stop_on_discard,
                        ApplyGate apply_gate, ApplyPauli apply_pauli, Measure measure, Reset reset) {
    ExecutionResult result;
    size_t next = 0;
    const auto &ops = c.ops();
    for (size_t k = 0; k < ops.size(); k++) {
        const Op &op = ops[k];
        if (next < faults.size() && faults[next].op_index < k) {
            throw std::invalid_argument("Injected faults must be sorted by op index");
        }
        switch (op.kind) {
            case OpKind::GATE:
                apply_gate(op.gate);
                break;
            case OpKind::MEASURE:
                while (next < faults.size() && faults[next].op_index == k) {
                    apply_pauli(faults[next].pauli);
                    next++;
                }
                result.record.add(op.label, measure(op.basis, op.qubit));
                break;
            case OpKind::RESET:
                reset(op.basis, op.qubit);
                break;
            case OpKind::CORRECT:
                if (op.condition.labels.empty() || op.condition.evaluate(result.record)) {
                    apply_pauli(op.pauli);
                }
                break;
            case OpKind::DISCARD_IF:
                if (op.condition.evaluate(result.record)) {
                    result.discarded = true;
                    if (stop_on_discard) {
                        return result;
                    }
                }
                break;
        }
        while (next < faults.size() && faults[next].op_index == k) {
            apply_pauli(faults[next].pauli);
            next++;
        }
    }
    if (next != faults.size()) {
        throw std::invalid_argument("Injected fault refers to an op past the end of the circuit");
    }
    return result;
}

}  // namespace

ExecutionResult run_on_tableau(const Circuit &c, StabilizerState &state, const std::vector<InjectedFault> &faults) {
    if (state.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("State size does not match the circuit");
    }
    return execute(
        c, faults, false, [&](const Gate &g) { state.apply_gate(g); },
        [&](const PauliString &p) { state.inject_error(p); },
        [&](char basis, size_t q) { return state.measure(PauliString::single(c.num_qubits(), q, basis)); },
        [&](char basis, size_t q) { state.reset(q, basis); });
}

ExecutionResult run_on_statevec(const Circuit &c, StateVector &state, std::mt19937_64 &rng,
                                const std::vector<InjectedFault> &faults, bool stop_on_discard) {
    if (state.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("State size does not match the circuit");
    }
    return execute(
        c, faults, stop_on_discard, [&](const Gate &g) { state.apply(g); }, [&](const PauliString &p) { state.apply_pauli(p); },
        [&](char basis, size_t q) { return state.measure(PauliString::single(c.num_qubits(), q, basis), rng); },
        [&](char basis, size_t q) { state.reset(q, basis, rng); });
}

}  // namespace cs832
