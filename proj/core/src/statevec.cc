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

#include "cs832/statevec.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace cs832 {

namespace {

constexpr double INV_SQRT2 = 0.70710678118654752440;
const Complex I1{0.0, 1.0};

// (I + s*i*P)/sqrt2 for a diagonalizable-by-letter Pauli P given as a dense
// matrix of size d.
std::vector<Complex> rotation(const std::vector<Complex> &p, size_t d, int s) {
    std::vector<Complex> m(d * d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            m[r * d + c] = ((r == c) ? 1.0 : 0.0) * INV_SQRT2 + double(s) * I1 * p[r * d + c] * INV_SQRT2;
        }
    }
    return m;
}

std::vector<Complex> kron2(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    // Target 0 is the low bit, so the operator is b (x) a in index order.
    std::vector<Complex> m(16);
    for (size_t r1 = 0; r1 < 2; r1++) {
        for (size_t c1 = 0; c1 < 2; c1++) {
            for (size_t r0 = 0; r0 < 2; r0++) {
                for (size_t c0 = 0; c0 < 2; c0++) {
                    m[(r1 * 2 + r0) * 4 + (c1 * 2 + c0)] = b[r1 * 2 + c1] * a[r0 * 2 + c0];
                }
            }
        }
    }
    return m;
}

const std::vector<Complex> PX = {0, 1, 1, 0};
const std::vector<Complex> PY = {0, -I1, I1, 0};
const std::vector<Complex> PZ = {1, 0, 0, -1};

// Factor picked up by basis state `index` under p; the state then moves to
// index ^ p.xs. Uses Y = iXZ, so P = i^(phase + #Y) X^x Z^z.
Complex pauli_phase_on(const PauliString &p, uint64_t index) {
    int k = p.phase + std::popcount(p.xs & p.zs) + 2 * (std::popcount(p.zs & index) & 1);
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

}  // namespace

std::vector<Complex> gate_matrix(GateKind kind) {
    const Complex w{INV_SQRT2, INV_SQRT2};
    switch (kind) {
        case GateKind::H:
            return {INV_SQRT2, INV_SQRT2, INV_SQRT2, -INV_SQRT2};
        case GateKind::S:
            return {1, 0, 0, I1};
        case GateKind::S_DAG:
            return {1, 0, 0, -I1};
        case GateKind::SQRT_X_DAG:
            return {Complex(0.5, -0.5), Complex(0.5, 0.5), Complex(0.5, 0.5), Complex(0.5, -0.5)};
        case GateKind::R_X:
            return rotation(PX, 2, -1);
        case GateKind::X:
            return PX;
        case GateKind::Y:
            return PY;
        case GateKind::Z:
            return PZ;
        case GateKind::T:
            return {1, 0, 0, w};
        case GateKind::T_DAG:
            return {1, 0, 0, std::conj(w)};
        case GateKind::CNOT: {
            // Control is target 0 (low bit).
            std::vector<Complex> m(16);
            for (size_t c = 0; c < 4; c++) {
                size_t r = (c & 1) ? (c ^ 2) : c;
                m[r * 4 + c] = 1;
            }
            return m;
        }
        case GateKind::CZ:
            return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
        case GateKind::SWAP:
            return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
        case GateKind::XX:
            return rotation(kron2(PX, PX), 4, +1);
        case GateKind::YY:
            return rotation(kron2(PY, PY), 4, -1);
        case GateKind::ZZ:
            return rotation(kron2(PZ, PZ), 4, -1);
        case GateKind::CCZ: {
            std::vector<Complex> m(64);
            for (size_t k = 0; k < 8; k++) {
                m[k * 8 + k] = k == 7 ? -1 : 1;
            }
            return m;
        }
    }
    throw std::invalid_argument("Unknown gate kind");
}

StateVector::StateVector(size_t n) : n_(n) {
    if (n > MAX_STATEVEC_QUBITS) {
        throw std::invalid_argument("StateVector capacity exceeded: " + std::to_string(n) + " qubits (max " +
                                    std::to_string(MAX_STATEVEC_QUBITS) + ")");
    }
    amps_.assign(size_t{1} << n, Complex{0, 0});
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    size_t d = amplitudes.size();
    if (d == 0 || (d & (d - 1)) != 0) {
        throw std::invalid_argument("Amplitude count must be a power of two");
    }
    StateVector s(std::countr_zero(d));
    s.amps_ = std::move(amplitudes);
    return s;
}

size_t StateVector::num_qubits() const {
    return n_;
}

const std::vector<Complex> &StateVector::amplitudes() const {
    return amps_;
}

double StateVector::norm_squared() const {
    double t = 0;
    for (const auto &a : amps_) {
        t += std::norm(a);
    }
    return t;
}

void StateVector::apply(const Gate &g) {
    size_t k = g.arity();
    for (size_t t = 0; t < k; t++) {
        if (g.targets[t] >= n_) {
            throw std::invalid_argument("Gate " + g.str() + " targets a qubit outside the state");
        }
    }
    if (g.kind == GateKind::CCZ) {
        uint64_t m = g.support_mask();
        for (size_t i = 0; i < amps_.size(); i++) {
            if ((i & m) == m) {
                amps_[i] = -amps_[i];
            }
        }
        return;
    }
    std::vector<Complex> u = gate_matrix(g.kind);
    size_t d = size_t{1} << k;
    uint64_t m = g.support_mask();
    std::vector<size_t> offsets(d);
    for (size_t local = 0; local < d; local++) {
        size_t off = 0;
        for (size_t t = 0; t < k; t++) {
            if ((local >> t) & 1) {
                off |= size_t{1} << g.targets[t];
            }
        }
        offsets[local] = off;
    }
    Complex in[4];
    for (size_t base = 0; base < amps_.size(); base++) {
        if (base & m) {
            continue;
        }
        for (size_t c = 0; c < d; c++) {
            in[c] = amps_[base | offsets[c]];
        }
        for (size_t r = 0; r < d; r++) {
            Complex acc = 0;
            for (size_t c = 0; c < d; c++) {
                acc += u[r * d + c] * in[c];
            }
            amps_[base | offsets[r]] = acc;
        }
    }
}

void StateVector::apply_pauli(const PauliString &p) {
    if (p.n != n_) {
        throw std::invalid_argument("Pauli size does not match the state");
    }
    std::vector<Complex> out(amps_.size());
    for (size_t i = 0; i < amps_.size(); i++) {
        out[i ^ p.xs] = pauli_phase_on(p, i) * amps_[i];
    }
    amps_ = std::move(out);
}

double StateVector::expectation(const PauliString &p) const {
    if (p.n != n_) {
        throw std::invalid_argument("Pauli size does not match the state");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("Invalid operator: expectation of non-Hermitian " + p.str());
    }
    Complex acc = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        acc += std::conj(amps_[i ^ p.xs]) * pauli_phase_on(p, i) * amps_[i];
    }
    return acc.real();
}

double StateVector::project(const PauliString &p, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("Projection outcome must be +1 or -1");
    }
    double e = expectation(p);
    double prob = (1.0 + outcome * e) / 2.0;
    if (prob < 1e-12) {
        throw std::invalid_argument("Projection onto a zero-probability outcome of " + p.str());
    }
    StateVector pp = *this;
    pp.apply_pauli(p);
    double scale = 1.0 / (2.0 * std::sqrt(prob));
    for (size_t i = 0; i < amps_.size(); i++) {
        amps_[i] = (amps_[i] + double(outcome) * pp.amps_[i]) * scale;
    }
    return prob;
}

int StateVector::measure(const PauliString &p, std::mt19937_64 &rng) {
    double e = expectation(p);
    double prob_plus = std::clamp((1.0 + e) / 2.0, 0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int outcome = u(rng) < prob_plus ? +1 : -1;
    project(p, outcome);
    return outcome;
}

void StateVector::reset(size_t q, char basis, std::mt19937_64 &rng) {
    if (q >= n_) {
        throw std::out_of_range("Reset target out of range");
    }
    if (basis != 'Z' && basis != 'X') {
        throw std::invalid_argument(std::string("Unknown reset basis '") + basis + "'");
    }
    PauliString m = PauliString::single(n_, q, basis);
    if (measure(m, rng) == -1) {
        apply_pauli(PauliString::single(n_, q, basis == 'Z' ? 'X' : 'Z'));
    }
}

uint64_t StateVector::measure_all_z(std::mt19937_64 &rng) const {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double r = u(rng) * norm_squared();
    double acc = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        acc += std::norm(amps_[i]);
        if (r < acc) {
            return i;
        }
    }
    for (size_t i = amps_.size(); i-- > 0;) {
        if (std::norm(amps_[i]) > 0) {
            return i;
        }
    }
    return 0;
}

std::string bits_to_string(uint64_t bits, size_t n) {
    std::string s;
    for (size_t q = 0; q < n; q++) {
        s += ((bits >> q) & 1) ? '1' : '0';
    }
    return s;
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    const auto &x = a.amplitudes();
    const auto &y = b.amplitudes();
    size_t best = 0;
    for (size_t i = 1; i < y.size(); i++) {
        if (std::abs(y[i]) > std::abs(y[best])) {
            best = i;
        }
    }
    if (std::abs(y[best]) == 0 || std::abs(x[best]) == 0) {
        return false;
    }
    Complex rot = x[best] / y[best];
    rot /= std::abs(rot);
    for (size_t i = 0; i < x.size(); i++) {
        if (std::abs(x[i] - rot * y[i]) >= tol) {
            return false;
        }
    }
    return true;
}

}  // namespace cs832
