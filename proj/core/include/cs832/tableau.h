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

#ifndef CS832_TABLEAU_H
#define CS832_TABLEAU_H

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cs832/gates.h"
#include "cs832/pauli.h"

namespace cs832 {

/// Ordered list of labelled +1/-1 measurement outcomes for one shot.
struct MeasurementRecord {
    std::vector<std::string> labels;
    std::vector<int8_t> outcomes;

    /// Appends an outcome; throws if the label was already recorded.
    void add(const std::string &label, int outcome);
    /// Outcome of `label`; throws if missing.
    int get(const std::string &label) const;
    size_t size() const;
};

/// Stabilizer state in destabilizer form.
///
/// Stabilizer i and destabilizer i anticommute; every other pair commutes.
/// Stabilizers always carry a +1 or -1 sign.
class StabilizerState {
   public:
    /// The all-zero state on `n` qubits.
    explicit StabilizerState(size_t n, uint64_t seed = 0);

    size_t num_qubits() const;
    const std::vector<PauliString> &stabilizers() const;
    const std::vector<PauliString> &destabilizers() const;

    /// Applies a Clifford gate. Throws for non-Clifford kinds.
    void apply_gate(const Gate &g);
    /// Measures a Hermitian Pauli and returns +1 or -1. Random outcomes are
    /// drawn from the state's generator.
    int measure(const PauliString &p);
    /// Measures with a caller-chosen outcome for the random case. The result
    /// is `forced` when random, otherwise the deterministic value.
    int measure_forced(const PauliString &p, int forced);
    /// Deterministic value of p (+1 or -1), or nullopt when random.
    std::optional<int> peek(const PauliString &p) const;
    /// Applies a Pauli operator to the state; stabilizers anticommuting with
    /// it flip sign.
    void inject_error(const PauliString &e);
    /// Resets qubit q to |0> (basis 'Z') or |+> (basis 'X').
    void reset(size_t q, char basis);

    /// Canonical generators of the stabilizer group.
    std::vector<PauliString> canonical_stabilizers() const;
    /// One stabilizer per line, then one destabilizer per line.
    std::string dump() const;

    std::mt19937_64 &rng();
    /// Checks the commutation and sign invariants; throws on a violation.
    void check_invariants() const;

   private:
    int measure_impl(const PauliString &p, std::optional<int> forced);

    size_t n_;
    std::vector<PauliString> stabilizers_;
    std::vector<PauliString> destabilizers_;
    std::mt19937_64 rng_;
};

/// Reduced row echelon form of a commuting independent generator set. X
/// columns come first, then Z columns, each ordered by qubit index. Throws
/// std::invalid_argument on non-Hermitian, anticommuting or dependent input.
std::vector<PauliString> canonicalize(const std::vector<PauliString> &generators);

/// True iff both lists generate the same signed group.
bool same_group(const std::vector<PauliString> &a, const std::vector<PauliString> &b);

/// If +p or -p lies in the group generated by `generators`, returns +1 or -1
/// respectively; otherwise nullopt. The generators must commute.
std::optional<int> group_sign(const std::vector<PauliString> &generators, const PauliString &p);

}  // namespace cs832

#endif
