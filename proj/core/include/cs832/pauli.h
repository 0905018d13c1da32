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

#ifndef CS832_PAULI_H
#define CS832_PAULI_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cs832 {

constexpr size_t MAX_PAULI_QUBITS = 64;

/// A signed Pauli operator on up to 64 qubits.
///
/// The operator is i^phase times a tensor product of Hermitian single qubit
/// Paulis. Qubit q carries X when bit q of `xs` is set, Z when bit q of `zs`
/// is set, and Y when both are set.
struct PauliString {
    uint32_t n = 0;
    uint64_t xs = 0;
    uint64_t zs = 0;
    /// Exponent of i in front of the tensor product, in 0..3.
    uint8_t phase = 0;

    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    static PauliString identity(size_t num_qubits);
    /// Single qubit Pauli `p` (one of 'I', 'X', 'Y', 'Z') on qubit `q`.
    static PauliString single(size_t num_qubits, size_t q, char p);
    /// The same Pauli `p` on every listed qubit.
    static PauliString on(size_t num_qubits, std::initializer_list<size_t> qubits, char p);
    static PauliString on(size_t num_qubits, const std::vector<size_t> &qubits, char p);
    /// Builds from bit masks with a sign of +1.
    static PauliString from_masks(size_t num_qubits, uint64_t xs, uint64_t zs);

    /// Parses either indexed notation ("-Z0Z1Z2Z3", "iX6X4") or dense
    /// notation ("+XIZI", "X_Z_"). Indexed strings need `num_qubits`.
    static PauliString from_str(std::string_view text, size_t num_qubits);
    /// Parses dense notation; the qubit count is the number of letters.
    static PauliString from_dense(std::string_view text);

    /// Indexed notation with an explicit sign, e.g. "+X6X4" or "-iY0".
    std::string str() const;
    /// Dense notation with an explicit sign, e.g. "+YX" for Y0X1.
    std::string dense_str() const;

    char at(size_t q) const;
    void set(size_t q, char p);
    size_t weight() const;
    uint64_t support() const;
    bool is_identity() const;
    bool is_hermitian() const;
    /// +1 or -1 for a Hermitian operator; throws otherwise.
    int sign() const;
    /// The operator with its sign reset to +1.
    PauliString unsigned_part() const;
    PauliString negated() const;
    /// Restriction of the operator to qubits `qs`, renumbered 0..qs.size()-1.
    PauliString restricted(const std::vector<size_t> &qs) const;
    /// Embeds into a larger register, mapping local qubit k to `qs[k]`.
    PauliString embedded(size_t num_qubits, const std::vector<size_t> &qs) const;

    bool commutes(const PauliString &other) const;
    PauliString operator*(const PauliString &rhs) const;
    PauliString &operator*=(const PauliString &rhs);

    bool operator==(const PauliString &other) const;
    bool operator!=(const PauliString &other) const;
    /// Equality ignoring the phase.
    bool equal_up_to_phase(const PauliString &other) const;
};

/// Signed product a*b with exact phase. Throws on a size mismatch.
PauliString multiply(const PauliString &a, const PauliString &b);

/// True iff the symplectic inner product of a and b is zero.
bool commutes(const PauliString &a, const PauliString &b);

/// Phase exponent (power of i) picked up when multiplying two unsigned Paulis
/// given as masks: (x1,z1)*(x2,z2) = i^k (x1^x2, z1^z2).
uint8_t product_phase(uint64_t x1, uint64_t z1, uint64_t x2, uint64_t z2);

std::ostream &operator<<(std::ostream &out, const PauliString &p);

}  // namespace cs832

#endif
