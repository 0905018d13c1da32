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

#include "cs832/tableau.h"

#include <sstream>
#include <stdexcept>

namespace cs832 {

namespace {

bool column_bit(const PauliString &p, size_t col) {
    if (col < p.n) {
        return (p.xs >> col) & 1;
    }
    return (p.zs >> (col - p.n)) & 1;
}

struct Echelon {
    std::vector<PauliString> rows;
    std::vector<size_t> pivots;
    size_t dropped = 0;
};

// Gauss-Jordan elimination over the symplectic columns. Rows that reduce to
// the identity are dropped and counted.
Echelon eliminate(std::vector<PauliString> rows, size_t n) {
    Echelon e;
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < rows.size(); col++) {
        size_t pick = rows.size();
        for (size_t r = rank; r < rows.size(); r++) {
            if (column_bit(rows[r], col)) {
                pick = r;
                break;
            }
        }
        if (pick == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pick]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && column_bit(rows[r], col)) {
                rows[r] *= rows[rank];
            }
        }
        e.pivots.push_back(col);
        rank++;
    }
    e.dropped = rows.size() - rank;
    rows.resize(rank);
    e.rows = std::move(rows);
    return e;
}

void check_commuting_hermitian(const std::vector<PauliString> &gens) {
    for (size_t i = 0; i < gens.size(); i++) {
        if (!gens[i].is_hermitian()) {
            throw std::invalid_argument("Invalid group: generator " + gens[i].str() + " is not Hermitian");
        }
        if (gens[i].n != gens[0].n) {
            throw std::invalid_argument("Invalid group: generators have different sizes");
        }
        for (size_t j = 0; j < i; j++) {
            if (!gens[i].commutes(gens[j])) {
                throw std::invalid_argument(
                    "Invalid group: " + gens[i].str() + " anticommutes with " + gens[j].str());
            }
        }
    }
}

}  // namespace

void MeasurementRecord::add(const std::string &label, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("Measurement outcome must be +1 or -1");
    }
    for (const auto &l : labels) {
        if (l == label) {
            throw std::invalid_argument("Duplicate measurement label '" + label + "'");
        }
    }
    labels.push_back(label);
    outcomes.push_back(static_cast<int8_t>(outcome));
}

int MeasurementRecord::get(const std::string &label) const {
    for (size_t k = 0; k < labels.size(); k++) {
        if (labels[k] == label) {
            return outcomes[k];
        }
    }
    throw std::out_of_range("No measurement labelled '" + label + "'");
}

size_t MeasurementRecord::size() const {
    return labels.size();
}

StabilizerState::StabilizerState(size_t n, uint64_t seed) : n_(n), rng_(seed) {
    if (n > MAX_PAULI_QUBITS) {
        throw std::invalid_argument("StabilizerState supports at most 64 qubits");
    }
    for (size_t q = 0; q < n; q++) {
        stabilizers_.push_back(PauliString::single(n, q, 'Z'));
        destabilizers_.push_back(PauliString::single(n, q, 'X'));
    }
}

size_t StabilizerState::num_qubits() const {
    return n_;
}

const std::vector<PauliString> &StabilizerState::stabilizers() const {
    return stabilizers_;
}

const std::vector<PauliString> &StabilizerState::destabilizers() const {
    return destabilizers_;
}

void StabilizerState::apply_gate(const Gate &g) {
    if (!is_clifford(g.kind)) {
        throw std::invalid_argument("Unsupported gate for the tableau simulator: " + g.str());
    }
    for (auto &s : stabilizers_) {
        conjugate_in_place(g, s);
    }
    for (auto &d : destabilizers_) {
        conjugate_in_place(g, d);
    }
}

int StabilizerState::measure(const PauliString &p) {
    return measure_impl(p, std::nullopt);
}

int StabilizerState::measure_forced(const PauliString &p, int forced) {
    return measure_impl(p, forced);
}

int StabilizerState::measure_impl(const PauliString &p, std::optional<int> forced) {
    if (p.n != n_) {
        throw std::invalid_argument("Measured operator size does not match the state");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("Invalid operator: cannot measure non-Hermitian " + p.str());
    }
    size_t k = n_;
    for (size_t i = 0; i < n_; i++) {
        if (!stabilizers_[i].commutes(p)) {
            k = i;
            break;
        }
    }
    if (k == n_) {
        return *peek(p);
    }
    for (size_t i = 0; i < n_; i++) {
        if (i != k && !stabilizers_[i].commutes(p)) {
            stabilizers_[i] *= stabilizers_[k];
        }
        if (i != k && !destabilizers_[i].commutes(p)) {
            destabilizers_[i] *= stabilizers_[k];
            destabilizers_[i].phase = 0;
        }
    }
    int outcome;
    if (forced.has_value()) {
        outcome = *forced;
    } else {
        outcome = (rng_() & 1) ? -1 : +1;
    }
    destabilizers_[k] = stabilizers_[k];
    destabilizers_[k].phase = 0;
    stabilizers_[k] = outcome == 1 ? p : p.negated();
    return outcome;
}

std::optional<int> StabilizerState::peek(const PauliString &p) const {
    if (p.n != n_) {
        throw std::invalid_argument("Peeked operator size does not match the state");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("Invalid operator: cannot measure non-Hermitian " + p.str());
    }
    for (const auto &s : stabilizers_) {
        if (!s.commutes(p)) {
            return std::nullopt;
        }
    }
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (!destabilizers_[i].commutes(p)) {
            acc *= stabilizers_[i];
        }
    }
    if (!acc.equal_up_to_phase(p)) {
        throw std::logic_error("Tableau invariant broken while peeking " + p.str());
    }
    return acc.phase == p.phase ? +1 : -1;
}

void StabilizerState::inject_error(const PauliString &e) {
    if (e.n != n_) {
        throw std::invalid_argument("Error size does not match the state");
    }
    for (auto &s : stabilizers_) {
        if (!s.commutes(e)) {
            s.phase = static_cast<uint8_t>((s.phase + 2) & 3);
        }
    }
}

void StabilizerState::reset(size_t q, char basis) {
    if (q >= n_) {
        throw std::out_of_range("Reset target out of range");
    }
    if (basis == 'Z') {
        if (measure(PauliString::single(n_, q, 'Z')) == -1) {
            inject_error(PauliString::single(n_, q, 'X'));
        }
    } else if (basis == 'X') {
        if (measure(PauliString::single(n_, q, 'X')) == -1) {
            inject_error(PauliString::single(n_, q, 'Z'));
        }
    } else {
        throw std::invalid_argument(std::string("Unknown reset basis '") + basis + "'");
    }
}

std::vector<PauliString> StabilizerState::canonical_stabilizers() const {
    return canonicalize(stabilizers_);
}

std::string StabilizerState::dump() const {
    std::ostringstream out;
    for (const auto &s : stabilizers_) {
        out << "S " << s.dense_str() << "\n";
    }
    for (const auto &d : destabilizers_) {
        out << "D " << d.dense_str() << "\n";
    }
    return out.str();
}

std::mt19937_64 &StabilizerState::rng() {
    return rng_;
}

void StabilizerState::check_invariants() const {
    for (size_t i = 0; i < n_; i++) {
        if (!stabilizers_[i].is_hermitian()) {
            throw std::logic_error("Stabilizer " + stabilizers_[i].str() + " has an imaginary phase");
        }
        for (size_t j = 0; j < n_; j++) {
            if (!stabilizers_[i].commutes(stabilizers_[j])) {
                throw std::logic_error("Stabilizers anticommute");
            }
            bool should_commute = i != j;
            if (destabilizers_[i].commutes(stabilizers_[j]) != should_commute) {
                throw std::logic_error("Destabilizer pairing broken");
            }
        }
    }
}

std::vector<PauliString> canonicalize(const std::vector<PauliString> &generators) {
    if (generators.empty()) {
        return {};
    }
    check_commuting_hermitian(generators);
    Echelon e = eliminate(generators, generators[0].n);
    if (e.dropped != 0) {
        throw std::invalid_argument("Invalid group: generators are not independent");
    }
    return e.rows;
}

bool same_group(const std::vector<PauliString> &a, const std::vector<PauliString> &b) {
    return canonicalize(a) == canonicalize(b);
}

std::optional<int> group_sign(const std::vector<PauliString> &generators, const PauliString &p) {
    if (generators.empty()) {
        if (p.is_identity()) {
            return p.sign();
        }
        return std::nullopt;
    }
    check_commuting_hermitian(generators);
    if (!p.is_hermitian()) {
        throw std::invalid_argument("group_sign needs a Hermitian operator");
    }
    size_t n = generators[0].n;
    Echelon e = eliminate(generators, n);
    PauliString acc(n);
    PauliString rem = p.unsigned_part();
    for (size_t r = 0; r < e.rows.size(); r++) {
        if (column_bit(rem, e.pivots[r])) {
            rem *= e.rows[r];
            acc *= e.rows[r];
        }
    }
    if (!rem.is_identity()) {
        return std::nullopt;
    }
    // acc equals +-p; compare phases.
    if (!acc.equal_up_to_phase(p)) {
        throw std::logic_error("group_sign reduction mismatch");
    }
    return acc.phase == p.phase ? +1 : -1;
}

}  // namespace cs832
