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

#ifndef CS832_EXPERIMENTS_H
#define CS832_EXPERIMENTS_H

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cs832/builders.h"
#include "cs832/frame.h"
#include "cs832/noise.h"
#include "cs832/protocol.h"

namespace cs832 {

struct Interval {
    double lo = 0;
    double hi = 1;
};

/// 95% Wilson score interval of k successes in n trials ([0, 1] when n = 0).
Interval wilson_interval(uint64_t k, uint64_t n, double z = 1.959963984540054);

/// Aggregated shot counts at one noise strength.
struct ExperimentResult {
    double p = 0;
    double q = 0;
    uint64_t n_total = 0;
    uint64_t n_postselected = 0;
    uint64_t n_failure = 0;

    /// n_failure / n_postselected (0 when nothing was accepted).
    double p_L() const;
    /// n_postselected / n_total.
    double R() const;
    Interval p_L_ci() const;
    Interval R_ci() const;
    ExperimentResult &operator+=(const ExperimentResult &other);
};

enum class ExperimentKind : uint8_t { PREP, SWITCH, HADAMARD, GROVER };

std::string experiment_kind_name(ExperimentKind k);
ExperimentKind parse_experiment_kind(const std::string &name);

/// Which circuit an experiment runs.
///   PREP: state preparation of `state` in `version`.
///   SWITCH: preparation of `state` in the source version of `direction`
///     followed by the switching algorithm (flags stripped unless
///     `flagged`).
///   HADAMARD: Version 1 preparation of `state` followed by the logical
///     Hadamard on logical qubit `logical`.
///   GROVER: the bare (`encoded` false) or encoded Grover circuit.
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::PREP;
    CodeVersion version = CodeVersion::V1;
    LogicalState state = LogicalState::ZERO_ZERO_ZERO;
    SwitchDirection direction = SwitchDirection::V1_TO_V2;
    size_t logical = 1;
    bool encoded = true;
    bool flagged = true;

    /// Short identifier such as "prep_v1_000" or "switch_1to2_+++".
    std::string name() const;
};

/// A circuit together with the rule that classifies its shots.
///
/// Clifford experiments are classified by a Pauli frame simulator against
/// a reference. Grover shots also propagate a Pauli frame, applied to the
/// readout of a noiseless run; a shot whose frame stalls on a non-Clifford
/// gate reruns on a state vector. This is exact because the marked set
/// {101, 011} is a coset of {000, 110}, so whether flipped readouts decode
/// to a marked string does not depend on which marked string the noiseless
/// run produced.
class Experiment {
   public:
    explicit Experiment(const ExperimentSpec &spec);

    const ExperimentSpec &spec() const;
    const Circuit &circuit() const;
    /// Reference of a Clifford experiment.
    const std::optional<Reference> &reference() const;

    /// Runs shots [begin, end). Shot s draws its randomness from
    /// (master_seed, stream, s), so counts do not depend on `threads`.
    ExperimentResult run(const NoiseModel &noise, uint64_t begin, uint64_t end, uint64_t master_seed,
                         uint64_t stream, size_t threads) const;

    /// Classification of one shot.
    ShotClass run_shot(const NoiseModel &noise, uint64_t master_seed, uint64_t stream, uint64_t shot) const;

   private:
    ShotClass run_grover_shot(const std::vector<InjectedFault> &faults, std::mt19937_64 &rng) const;
    ShotClass classify_grover_frame(const FrameSimulator::Propagation &r) const;

    ExperimentSpec spec_;
    Circuit circuit_;
    std::optional<Reference> reference_;
    std::shared_ptr<const FrameSimulator> frame_;
    /// Readout of a noiseless Grover run.
    MeasurementRecord grover_ideal_;
};

/// Runs `shots` shots of a circuit under noise and classifies each against
/// `reference` (Clifford circuits only).
ExperimentResult run_experiment(const Circuit &c, const NoiseModel &noise, uint64_t shots, const Reference &reference,
                                uint64_t master_seed = 0, size_t threads = 0);

/// Raised when a fit has fewer than three points with failures.
class InsufficientFailures : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ScalingFit {
    double exponent = 0;
    double prefactor = 0;
    double r_squared = 0;
};

/// Least squares fit of log p_L = a log p + b over points (p, p_L) with
/// p_L > 0, each weighted by `weights` (all 1 when empty). Returns a, e^b
/// and the weighted r^2.
ScalingFit fit_scaling(const std::vector<std::pair<double, double>> &points, const std::vector<double> &weights = {});

/// Fit over sweep rows, weighting each by its failure count (the inverse
/// variance of log p_L).
ScalingFit fit_scaling(const std::vector<ExperimentResult> &rows);

struct SweepOptions {
    std::vector<double> ps;
    /// q = q_ratio * p.
    double q_ratio = 0.1;
    /// Shots double from initial_shots until min_failures failures or
    /// max_shots shots.
    uint64_t min_failures = 50;
    uint64_t initial_shots = 10000;
    uint64_t max_shots = 4000000;
    uint64_t master_seed = 0;
    size_t threads = 0;
};

/// Adaptive sweep, one row per p. Row i uses stream i.
std::vector<ExperimentResult> run_sweep(const Experiment &e, const SweepOptions &options);

/// `count` log-spaced values from lo to hi inclusive.
std::vector<double> log_spaced(double lo, double hi, size_t count);

/// Columns p, q, shots, n_postselected, n_failure, p_L, p_L_ci_lo,
/// p_L_ci_hi, R, R_ci_lo, R_ci_hi.
std::string sweep_csv(const std::vector<ExperimentResult> &rows);

}  // namespace cs832

#endif
