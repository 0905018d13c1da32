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

#ifndef CS832_NOISE_H
#define CS832_NOISE_H

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "cs832/circuit.h"

namespace cs832 {

/// Depolarizing gate noise. After a noisy gate on k qubits one of the
/// 4^k - 1 non-identity Paulis on its support is applied, each with
/// probability rate / (4^k - 1). The rate is q for one qubit gates and p
/// otherwise. Initialization, measurement and corrections are noiseless.
struct NoiseModel {
    double p = 0;
    double q = 0;

    /// p with the default q = p / 10.
    static NoiseModel depolarizing(double p);

    /// Throws unless 0 <= p, q <= 1.
    void validate() const;
    /// Total fault probability after gate g.
    double rate(const Gate &g) const;
};

/// The index-th non-identity Pauli (1 <= index < 4^k) on the support of g,
/// two bits per target in IXYZ order, first target lowest.
PauliString gate_fault(const Gate &g, size_t num_qubits, size_t index);

/// Draws the fault after gate g: none with probability 1 - rate, otherwise
/// a uniformly random non-identity Pauli on the gate's support.
std::optional<PauliString> sample_fault(const NoiseModel &noise, const Gate &g, size_t num_qubits,
                                        std::mt19937_64 &rng);

/// Samples the full fault configuration of a circuit.
///
/// Equivalent to one sample_fault per noisy gate, but jumps directly from
/// one fault to the next using the cumulative no-fault probability so
/// fault-free stretches cost nothing.
class FaultSampler {
   public:
    FaultSampler(const Circuit &c, const NoiseModel &noise);

    /// Probability that a shot has no fault at all.
    double no_fault_probability() const;
    /// Faults sorted by op index.
    template <typename Rng>
    std::vector<InjectedFault> sample(Rng &rng) const;

   private:
    size_t num_qubits_;
    std::vector<size_t> ops_;
    std::vector<Gate> gates_;
    std::vector<double> rates_;
    /// hazard_[k] = -sum_{i<k} log(1 - rates_[i]).
    std::vector<double> hazard_;
    bool direct_ = false;
};

/// splitmix64 finalizer.
uint64_t mix64(uint64_t x);

/// The splitmix64 generator. Cheap to seed, used for per-shot fault draws.
class SplitMix64 {
   public:
    using result_type = uint64_t;
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type(0); }
    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

   private:
    uint64_t state_;
};

/// Seed of one shot, derived from (master_seed, stream, shot) so shots are
/// independent of scheduling.
uint64_t shot_seed(uint64_t master_seed, uint64_t stream, uint64_t shot);

/// Generators for one shot.
std::mt19937_64 shot_rng(uint64_t master_seed, uint64_t stream, uint64_t shot);
SplitMix64 shot_stream(uint64_t master_seed, uint64_t stream, uint64_t shot);

namespace internal {

template <typename Rng>
double uniform01(Rng &rng) {
    return std::generate_canonical<double, 64>(rng);
}

template <typename Rng>
size_t random_fault_index(const Gate &g, Rng &rng) {
    size_t count = (size_t(1) << (2 * g.arity())) - 1;
    return 1 + std::uniform_int_distribution<size_t>(0, count - 1)(rng);
}

}  // namespace internal

template <typename Rng>
std::vector<InjectedFault> FaultSampler::sample(Rng &rng) const {
    std::vector<InjectedFault> out;
    auto fault_at = [&](size_t i) {
        out.push_back({ops_[i], gate_fault(gates_[i], num_qubits_, internal::random_fault_index(gates_[i], rng))});
    };
    if (direct_) {
        for (size_t i = 0; i < rates_.size(); i++) {
            if (internal::uniform01(rng) < rates_[i]) {
                fault_at(i);
            }
        }
        return out;
    }
    // The next faulty gate at or after `start` is the first i whose
    // cumulative hazard since `start` exceeds an exponential draw.
    size_t start = 0;
    while (start < rates_.size()) {
        double target = hazard_[start] - std::log1p(-internal::uniform01(rng));
        auto it = std::upper_bound(hazard_.begin() + start + 1, hazard_.end(), target);
        if (it == hazard_.end()) {
            break;
        }
        size_t i = (it - hazard_.begin()) - 1;
        fault_at(i);
        start = i + 1;
    }
    return out;
}

}  // namespace cs832

#endif
