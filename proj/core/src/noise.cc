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

#include "cs832/noise.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cs832 {

namespace {

// Above this rate the jump sampler's logarithms lose precision, so each
// gate is drawn separately.
constexpr double DIRECT_SAMPLING_RATE = 0.5;

}  // namespace

NoiseModel NoiseModel::depolarizing(double p) {
    NoiseModel m{p, p / 10};
    m.validate();
    return m;
}

void NoiseModel::validate() const {
    if (!(p >= 0 && p <= 1) || !(q >= 0 && q <= 1)) {
        throw std::invalid_argument("Noise rates must lie in [0, 1], got p=" + std::to_string(p) +
                                    " q=" + std::to_string(q));
    }
}

double NoiseModel::rate(const Gate &g) const {
    return g.arity() == 1 ? q : p;
}

PauliString gate_fault(const Gate &g, size_t num_qubits, size_t index) {
    std::vector<size_t> qs = g.qubits();
    if (index == 0 || index >= (size_t(1) << (2 * qs.size()))) {
        throw std::invalid_argument("Fault index out of range");
    }
    PauliString p(num_qubits);
    for (size_t t = 0; t < qs.size(); t++) {
        p.set(qs[t], "IXYZ"[(index >> (2 * t)) & 3]);
    }
    return p;
}

std::optional<PauliString> sample_fault(const NoiseModel &noise, const Gate &g, size_t num_qubits,
                                        std::mt19937_64 &rng) {
    double r = noise.rate(g);
    if (r <= 0 || internal::uniform01(rng) >= r) {
        return std::nullopt;
    }
    return gate_fault(g, num_qubits, internal::random_fault_index(g, rng));
}

FaultSampler::FaultSampler(const Circuit &c, const NoiseModel &noise) : num_qubits_(c.num_qubits()) {
    noise.validate();
    const auto &ops = c.ops();
    for (size_t k = 0; k < ops.size(); k++) {
        if (ops[k].kind != OpKind::GATE || ops[k].noiseless) {
            continue;
        }
        double r = noise.rate(ops[k].gate);
        if (r <= 0) {
            continue;
        }
        ops_.push_back(k);
        gates_.push_back(ops[k].gate);
        rates_.push_back(r);
        direct_ = direct_ || r > DIRECT_SAMPLING_RATE;
    }
    hazard_.assign(1, 0.0);
    for (double r : rates_) {
        hazard_.push_back(hazard_.back() - std::log1p(-std::min(r, DIRECT_SAMPLING_RATE)));
    }
}

double FaultSampler::no_fault_probability() const {
    double s = 1;
    for (double r : rates_) {
        s *= 1 - r;
    }
    return s;
}

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t shot_seed(uint64_t master_seed, uint64_t stream, uint64_t shot) {
    return mix64(mix64(mix64(master_seed) ^ stream) ^ shot);
}

std::mt19937_64 shot_rng(uint64_t master_seed, uint64_t stream, uint64_t shot) {
    return std::mt19937_64(shot_seed(master_seed, stream, shot));
}

SplitMix64 shot_stream(uint64_t master_seed, uint64_t stream, uint64_t shot) {
    return SplitMix64(shot_seed(master_seed, stream, shot));
}

}  // namespace cs832
