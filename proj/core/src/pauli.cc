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

#include "cs832/pauli.h"

#include <bit>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cs832 {

namespace {

void check_size(size_t n) {
    if (n > MAX_PAULI_QUBITS) {
        throw std::invalid_argument(
            "PauliString supports at most 64 qubits, got " + std::to_string(n));
    }
}

void check_same_size(const PauliString &a, const PauliString &b) {
    if (a.n != b.n) {
        throw std::invalid_argument(
            "Pauli size mismatch: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
    }
}

uint64_t mask_for(size_t n) {
    return n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

const char *phase_prefix(uint8_t phase) {
    switch (phase & 3) {
        case 0:
            return "+";
        case 1:
            return "+i";
        case 2:
            return "-";
        default:
            return "-i";
    }
}

// Strips an optional "+", "-", "i", "+i", "-i" prefix and returns its phase.
uint8_t parse_sign(std::string_view &text) {
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        if (text[0] == '-') {
            phase = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    return phase;
}

bool is_pauli_letter(char c) {
    return c == 'I' || c == 'X' || c == 'Y' || c == 'Z' || c == '_';
}

}  // namespace

uint8_t product_phase(uint64_t x1, uint64_t z1, uint64_t x2, uint64_t z2) {
    // Cyclic products XY, YZ, ZX give +i; the reversed order gives -i.
    uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
    uint64_t minus = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2);
    int k = std::popcount(plus) - std::popcount(minus);
    return static_cast<uint8_t>(k & 3);
}

PauliString::PauliString(size_t num_qubits) : n(static_cast<uint32_t>(num_qubits)) {
    check_size(num_qubits);
}

PauliString PauliString::identity(size_t num_qubits) {
    return PauliString(num_qubits);
}

PauliString PauliString::single(size_t num_qubits, size_t q, char p) {
    PauliString r(num_qubits);
    r.set(q, p);
    return r;
}

PauliString PauliString::on(size_t num_qubits, std::initializer_list<size_t> qubits, char p) {
    return on(num_qubits, std::vector<size_t>(qubits), p);
}

PauliString PauliString::on(size_t num_qubits, const std::vector<size_t> &qubits, char p) {
    PauliString r(num_qubits);
    for (size_t q : qubits) {
        r.set(q, p);
    }
    return r;
}

PauliString PauliString::from_masks(size_t num_qubits, uint64_t xs, uint64_t zs) {
    PauliString r(num_qubits);
    uint64_t m = mask_for(num_qubits);
    if ((xs | zs) & ~m) {
        throw std::invalid_argument("Pauli mask has bits beyond the qubit count");
    }
    r.xs = xs;
    r.zs = zs;
    return r;
}

PauliString PauliString::from_dense(std::string_view text) {
    std::string_view body = text;
    uint8_t phase = parse_sign(body);
    PauliString r(body.size());
    for (size_t q = 0; q < body.size(); q++) {
        if (!is_pauli_letter(body[q])) {
            throw std::invalid_argument("Bad character in dense Pauli string '" + std::string(text) + "'");
        }
        r.set(q, body[q]);
    }
    r.phase = phase;
    return r;
}

PauliString PauliString::from_str(std::string_view text, size_t num_qubits) {
    std::string_view body = text;
    uint8_t phase = parse_sign(body);
    bool indexed = false;
    for (char c : body) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            indexed = true;
        }
    }
    if (!indexed && body == "I" && num_qubits != 0) {
        // Indexed notation prints the identity as a bare "I".
        PauliString r(num_qubits);
        r.phase = phase;
        return r;
    }
    if (!indexed) {
        PauliString r = from_dense(body);
        if (num_qubits != 0 && r.n != num_qubits) {
            throw std::invalid_argument(
                "Dense Pauli '" + std::string(text) + "' has " + std::to_string(r.n) + " letters, expected " +
                std::to_string(num_qubits));
        }
        r.phase = phase;
        return r;
    }
    PauliString r(num_qubits);
    static constexpr std::string_view tensor_power = "\xE2\x8A\x97";
    size_t k = 0;
    while (k < body.size()) {
        char c = body[k];
        if (c == ' ' || c == '*') {
            k++;
            continue;
        }
        if (!is_pauli_letter(c) || c == '_') {
            throw std::invalid_argument("Bad Pauli letter in '" + std::string(text) + "'");
        }
        k++;
        bool power = false;
        if (body.substr(k, tensor_power.size()) == tensor_power) {
            power = true;
            k += tensor_power.size();
        } else if (k < body.size() && body[k] == '^') {
            power = true;
            k++;
        }
        size_t start = k;
        while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) {
            k++;
        }
        if (start == k) {
            throw std::invalid_argument("Missing qubit index in '" + std::string(text) + "'");
        }
        size_t v = std::stoul(std::string(body.substr(start, k - start)));
        if (power) {
            for (size_t q = 0; q < v; q++) {
                r.set(q, c);
            }
            continue;
        }
        if (v >= num_qubits) {
            throw std::invalid_argument("Qubit index out of range in '" + std::string(text) + "'");
        }
        // Repeated indices multiply, so "X0Z0" is -iY0.
        PauliString f = single(num_qubits, v, c);
        r *= f;
    }
    r.phase = static_cast<uint8_t>((r.phase + phase) & 3);
    return r;
}

std::string PauliString::str() const {
    std::string out = phase_prefix(phase);
    if (is_identity()) {
        out += "I";
        return out;
    }
    for (size_t q = 0; q < n; q++) {
        char c = at(q);
        if (c != 'I') {
            out += c;
            out += std::to_string(q);
        }
    }
    return out;
}

std::string PauliString::dense_str() const {
    std::string out = phase_prefix(phase);
    for (size_t q = 0; q < n; q++) {
        out += at(q);
    }
    return out;
}

char PauliString::at(size_t q) const {
    if (q >= n) {
        throw std::out_of_range("Qubit " + std::to_string(q) + " out of range");
    }
    bool x = (xs >> q) & 1;
    bool z = (zs >> q) & 1;
    return "IZXY"[(x << 1) | z];
}

void PauliString::set(size_t q, char p) {
    if (q >= n) {
        throw std::out_of_range("Qubit " + std::to_string(q) + " out of range");
    }
    uint64_t bit = uint64_t{1} << q;
    xs &= ~bit;
    zs &= ~bit;
    switch (p) {
        case 'I':
        case '_':
            break;
        case 'X':
            xs |= bit;
            break;
        case 'Y':
            xs |= bit;
            zs |= bit;
            break;
        case 'Z':
            zs |= bit;
            break;
        default:
            throw std::invalid_argument(std::string("Unknown Pauli letter '") + p + "'");
    }
}

size_t PauliString::weight() const {
    return std::popcount(xs | zs);
}

uint64_t PauliString::support() const {
    return xs | zs;
}

bool PauliString::is_identity() const {
    return (xs | zs) == 0;
}

bool PauliString::is_hermitian() const {
    return (phase & 1) == 0;
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::invalid_argument("Operator " + str() + " is not Hermitian");
    }
    return phase == 0 ? +1 : -1;
}

PauliString PauliString::unsigned_part() const {
    PauliString r = *this;
    r.phase = 0;
    return r;
}

PauliString PauliString::negated() const {
    PauliString r = *this;
    r.phase = static_cast<uint8_t>((phase + 2) & 3);
    return r;
}

PauliString PauliString::restricted(const std::vector<size_t> &qs) const {
    PauliString r(qs.size());
    for (size_t k = 0; k < qs.size(); k++) {
        r.set(k, at(qs[k]));
    }
    r.phase = phase;
    return r;
}

PauliString PauliString::embedded(size_t num_qubits, const std::vector<size_t> &qs) const {
    if (qs.size() != n) {
        throw std::invalid_argument("Embedding map size does not match the Pauli size");
    }
    PauliString r(num_qubits);
    for (size_t k = 0; k < qs.size(); k++) {
        r.set(qs[k], at(k));
    }
    r.phase = phase;
    return r;
}

bool PauliString::commutes(const PauliString &other) const {
    check_same_size(*this, other);
    return (std::popcount((xs & other.zs) ^ (zs & other.xs)) & 1) == 0;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    PauliString r = *this;
    r *= rhs;
    return r;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    check_same_size(*this, rhs);
    uint8_t k = product_phase(xs, zs, rhs.xs, rhs.zs);
    phase = static_cast<uint8_t>((phase + rhs.phase + k) & 3);
    xs ^= rhs.xs;
    zs ^= rhs.zs;
    return *this;
}

bool PauliString::operator==(const PauliString &other) const {
    return n == other.n && xs == other.xs && zs == other.zs && phase == other.phase;
}

bool PauliString::operator!=(const PauliString &other) const {
    return !(*this == other);
}

bool PauliString::equal_up_to_phase(const PauliString &other) const {
    return n == other.n && xs == other.xs && zs == other.zs;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    return a * b;
}

bool commutes(const PauliString &a, const PauliString &b) {
    return a.commutes(b);
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

}  // namespace cs832
