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

#ifndef CS832_STATEVEC_H
#define CS832_STATEVEC_H

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cs832/gates.h"
#include "cs832/pauli.h"

namespace cs832 {

using Complex = std::complex<double>;

constexpr size_t MAX_STATEVEC_QUBITS = 20;

/// Dense matrix of a gate kind in row-major order, acting on its own
/// targets. Bit k of a row or column index is target k.
std::vector<Complex> gate_matrix(GateKind kind);

/// Dense state vector. Bit q of an amplitude index is qubit q.
class StateVector {
   public:
    /// The all-zero state. Throws for more than MAX_STATEVEC_QUBITS qubits.
    explicit StateVector(size_t n);
    /// Wraps explicit amplitudes; the length must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    size_t num_qubits() const;
    const std::vector<Complex> &amplitudes() const;
    double norm_squared() const;

    void apply(const Gate &g);
    /// Multiplies the state by the operator p, including its phase.
    void apply_pauli(const PauliString &p);
    /// <psi|P|psi> for a Hermitian P.
    double expectation(const PauliString &p) const;
    /// Projective measurement of a Hermitian Pauli. Returns +1 or -1.
    int measure(const PauliString &p, std::mt19937_64 &rng);
    /// Projects onto the `outcome` eigenspace of p and returns its
    /// probability. Throws if the probability vanishes.
    double project(const PauliString &p, int outcome);
    /// Resets qubit q to |0> (basis 'Z') or |+> (basis 'X').
    void reset(size_t q, char basis, std::mt19937_64 &rng);
    /// Samples a Z basis readout of every qubit; bit q of the result is
    /// qubit q. The state is not collapsed.
    uint64_t measure_all_z(std::mt19937_64 &rng) const;

   private:
    size_t n_;
    std::vector<Complex> amps_;
};

/// Bitstring with qubit 0 first, e.g. "101" for qubits 0 and 2 set.
std::string bits_to_string(uint64_t bits, size_t n);

/// True iff max_k |a_k - e^{i theta} b_k| < tol, with theta fixed by the
/// largest-magnitude amplitude of b.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol);

}  // namespace cs832

#endif
