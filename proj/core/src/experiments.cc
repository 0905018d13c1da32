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

#include "cs832/experiments.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cs832/parallel.h"

namespace cs832 {

namespace {

constexpr uint64_t CHUNK_SHOTS = 4096;
constexpr size_t GROVER_NOISELESS_CHECKS = 16;

std::vector<size_t> identity_map(const Circuit &c) {
    std::vector<size_t> map;
    for (size_t q = 0; q < c.num_qubits(); q++) {
        map.push_back(q);
    }
    return map;
}

void count(ExperimentResult &r, ShotClass k) {
    r.n_total++;
    if (k != ShotClass::DISCARD) {
        r.n_postselected++;
    }
    if (k == ShotClass::FAILURE) {
        r.n_failure++;
    }
}

bool grover_marked(const std::string &bits) {
    return bits == "101" || bits == "011";
}

}  // namespace

Interval wilson_interval(uint64_t k, uint64_t n, double z) {
    if (n == 0) {
        return {0, 1};
    }
    double nn = double(n);
    double phat = double(k) / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double center = (phat + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
    return {k == 0 ? 0.0 : std::max(0.0, center - half), k == n ? 1.0 : std::min(1.0, center + half)};
}

double ExperimentResult::p_L() const {
    return n_postselected == 0 ? 0 : double(n_failure) / double(n_postselected);
}

double ExperimentResult::R() const {
    return n_total == 0 ? 0 : double(n_postselected) / double(n_total);
}

Interval ExperimentResult::p_L_ci() const {
    return wilson_interval(n_failure, n_postselected);
}

Interval ExperimentResult::R_ci() const {
    return wilson_interval(n_postselected, n_total);
}

ExperimentResult &ExperimentResult::operator+=(const ExperimentResult &other) {
    n_total += other.n_total;
    n_postselected += other.n_postselected;
    n_failure += other.n_failure;
    return *this;
}

std::string experiment_kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::PREP:
            return "prep";
        case ExperimentKind::SWITCH:
            return "switch";
        case ExperimentKind::HADAMARD:
            return "hadamard";
        case ExperimentKind::GROVER:
            return "grover";
    }
    return "";
}

ExperimentKind parse_experiment_kind(const std::string &name) {
    for (auto k : {ExperimentKind::PREP, ExperimentKind::SWITCH, ExperimentKind::HADAMARD, ExperimentKind::GROVER}) {
        if (experiment_kind_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("Unknown experiment '" + name + "'");
}

std::string ExperimentSpec::name() const {
    std::string s = experiment_kind_name(kind);
    switch (kind) {
        case ExperimentKind::PREP:
            return s + "_v" + std::to_string(int(version)) + "_" + logical_state_label(state);
        case ExperimentKind::SWITCH:
            return s + (direction == SwitchDirection::V1_TO_V2 ? "_1to2_" : "_2to1_") + logical_state_label(state) +
                   (flagged ? "" : "_unflagged");
        case ExperimentKind::HADAMARD:
            return s + "_h" + std::to_string(logical) + "_" + logical_state_label(state);
        case ExperimentKind::GROVER:
            return s + (encoded ? "_encoded" : "_bare");
    }
    return s;
}

Experiment::Experiment(const ExperimentSpec &spec) : spec_(spec) {
    switch (spec.kind) {
        case ExperimentKind::PREP:
            circuit_ = build_state_prep(spec.version, spec.state);
            reference_ = prep_reference(spec.version, spec.state);
            break;
        case ExperimentKind::SWITCH: {
            bool up = spec.direction == SwitchDirection::V1_TO_V2;
            CodeVersion source = up ? CodeVersion::V1 : CodeVersion::V2;
            CodeVersion target = up ? CodeVersion::V2 : CodeVersion::V1;
            circuit_ = build_state_prep(source, spec.state);
            circuit_.append(build_switch(spec.direction, spec.flagged), identity_map(circuit_), "sw_");
            reference_ = code_reference(code_for(target), logical_state_label(spec.state), circuit_.num_qubits());
            break;
        }
        case ExperimentKind::HADAMARD: {
            if (spec.logical < 1 || spec.logical > 3) {
                throw std::invalid_argument("Logical index must be 1, 2 or 3");
            }
            circuit_ = build_state_prep(CodeVersion::V1, spec.state);
            circuit_.append(build_logical_hadamard(spec.logical), identity_map(circuit_), "h_");
            LogicalGateSpec h = find_logical_gate(CodeVersion::V1, "H" + std::to_string(spec.logical));
            reference_ = prep_reference(CodeVersion::V1, spec.state).conjugated(h.physical_gates());
            break;
        }
        case ExperimentKind::GROVER: {
            circuit_ = build_grover(spec.encoded);
            // Fault free shots are counted as successes without simulation,
            // which relies on the noiseless circuit always succeeding.
            for (size_t t = 0; t < GROVER_NOISELESS_CHECKS; t++) {
                std::mt19937_64 rng(t);
                if (run_grover_shot({}, rng) != ShotClass::SUCCESS) {
                    throw std::logic_error("Noiseless Grover run did not succeed");
                }
            }
            std::mt19937_64 rng(0);
            StateVector state(circuit_.num_qubits());
            grover_ideal_ = run_on_statevec(circuit_, state, rng).record;
            frame_ = std::make_shared<FrameSimulator>(circuit_);
            if (grover_ideal_.size() != frame_->num_measurements()) {
                throw std::logic_error("Noiseless Grover readout is incomplete");
            }
            return;
        }
    }
    frame_ = std::make_shared<FrameSimulator>(circuit_, *reference_);
}

const ExperimentSpec &Experiment::spec() const {
    return spec_;
}

const Circuit &Experiment::circuit() const {
    return circuit_;
}

const std::optional<Reference> &Experiment::reference() const {
    return reference_;
}

ShotClass Experiment::run_grover_shot(const std::vector<InjectedFault> &faults, std::mt19937_64 &rng) const {
    StateVector state(circuit_.num_qubits());
    ExecutionResult r = run_on_statevec(circuit_, state, rng, faults, true);
    if (r.discarded) {
        return ShotClass::DISCARD;
    }
    auto bits = decode_grover(r.record, spec_.encoded);
    if (!bits) {
        return ShotClass::DISCARD;
    }
    return grover_marked(*bits) ? ShotClass::SUCCESS : ShotClass::FAILURE;
}

ShotClass Experiment::classify_grover_frame(const FrameSimulator::Propagation &r) const {
    if (r.discarded) {
        return ShotClass::DISCARD;
    }
    MeasurementRecord record = grover_ideal_;
    for (size_t i = 0; i < r.flips.size(); i++) {
        if (r.flips[i]) {
            record.outcomes[i] = int8_t(-record.outcomes[i]);
        }
    }
    auto bits = decode_grover(record, spec_.encoded);
    if (!bits) {
        return ShotClass::DISCARD;
    }
    return grover_marked(*bits) ? ShotClass::SUCCESS : ShotClass::FAILURE;
}

ExperimentResult Experiment::run(const NoiseModel &noise, uint64_t begin, uint64_t end, uint64_t master_seed,
                                 uint64_t stream, size_t threads) const {
    FaultSampler sampler(circuit_, noise);
    uint64_t shots = end > begin ? end - begin : 0;
    size_t chunks = (shots + CHUNK_SHOTS - 1) / CHUNK_SHOTS;
    std::vector<ExperimentResult> partial(chunks);
    parallel_for(chunks, threads, [&](size_t chunk) {
        uint64_t lo = begin + chunk * CHUNK_SHOTS;
        uint64_t hi = std::min(end, lo + CHUNK_SHOTS);
        ExperimentResult &r = partial[chunk];
        for (uint64_t s = lo; s < hi; s++) {
            if (spec_.kind != ExperimentKind::GROVER) {
                SplitMix64 rng = shot_stream(master_seed, stream, s);
                count(r, frame_->run(sampler.sample(rng)));
                continue;
            }
            std::mt19937_64 rng = shot_rng(master_seed, stream, s);
            auto faults = sampler.sample(rng);
            auto propagated = frame_->propagate(faults);
            count(r, propagated ? classify_grover_frame(*propagated) : run_grover_shot(faults, rng));
        }
    });
    ExperimentResult total;
    total.p = noise.p;
    total.q = noise.q;
    for (const auto &r : partial) {
        total += r;
    }
    return total;
}

ShotClass Experiment::run_shot(const NoiseModel &noise, uint64_t master_seed, uint64_t stream, uint64_t shot) const {
    ExperimentResult r = run(noise, shot, shot + 1, master_seed, stream, 1);
    if (r.n_failure) {
        return ShotClass::FAILURE;
    }
    return r.n_postselected ? ShotClass::SUCCESS : ShotClass::DISCARD;
}

ExperimentResult run_experiment(const Circuit &c, const NoiseModel &noise, uint64_t shots, const Reference &reference,
                                uint64_t master_seed, size_t threads) {
    if (shots < 1) {
        throw std::invalid_argument("Need at least one shot");
    }
    FrameSimulator frame(c, reference);
    FaultSampler sampler(c, noise);
    size_t chunks = (shots + CHUNK_SHOTS - 1) / CHUNK_SHOTS;
    std::vector<ExperimentResult> partial(chunks);
    parallel_for(chunks, threads, [&](size_t chunk) {
        uint64_t lo = chunk * CHUNK_SHOTS;
        uint64_t hi = std::min(shots, lo + CHUNK_SHOTS);
        for (uint64_t s = lo; s < hi; s++) {
            SplitMix64 rng = shot_stream(master_seed, 0, s);
            count(partial[chunk], frame.run(sampler.sample(rng)));
        }
    });
    ExperimentResult total;
    total.p = noise.p;
    total.q = noise.q;
    for (const auto &r : partial) {
        total += r;
    }
    return total;
}

ScalingFit fit_scaling(const std::vector<std::pair<double, double>> &points, const std::vector<double> &weights) {
    if (!weights.empty() && weights.size() != points.size()) {
        throw std::invalid_argument("One weight per point is required");
    }
    std::vector<double> xs, ys, ws;
    for (size_t i = 0; i < points.size(); i++) {
        auto [p, pl] = points[i];
        double w = weights.empty() ? 1.0 : weights[i];
        if (p > 0 && pl > 0 && w > 0) {
            xs.push_back(std::log(p));
            ys.push_back(std::log(pl));
            ws.push_back(w);
        }
    }
    if (xs.size() < 3) {
        throw InsufficientFailures("Scaling fit needs at least 3 points with p_L > 0, got " +
                                   std::to_string(xs.size()) + "; raise the shot count");
    }
    double sw = 0, sx = 0, sy = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        sw += ws[i];
        sx += ws[i] * xs[i];
        sy += ws[i] * ys[i];
    }
    double xbar = sx / sw;
    double ybar = sy / sw;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        sxx += ws[i] * (xs[i] - xbar) * (xs[i] - xbar);
        sxy += ws[i] * (xs[i] - xbar) * (ys[i] - ybar);
        syy += ws[i] * (ys[i] - ybar) * (ys[i] - ybar);
    }
    if (sxx == 0) {
        throw std::invalid_argument("Scaling fit needs at least two distinct p values");
    }
    ScalingFit fit;
    fit.exponent = sxy / sxx;
    double b = ybar - fit.exponent * xbar;
    fit.prefactor = std::exp(b);
    double sse = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        double r = ys[i] - (fit.exponent * xs[i] + b);
        sse += ws[i] * r * r;
    }
    fit.r_squared = syy == 0 ? 1 : 1 - sse / syy;
    return fit;
}

ScalingFit fit_scaling(const std::vector<ExperimentResult> &rows) {
    std::vector<std::pair<double, double>> points;
    std::vector<double> weights;
    for (const auto &r : rows) {
        points.emplace_back(r.p, r.p_L());
        weights.push_back(double(r.n_failure));
    }
    return fit_scaling(points, weights);
}

std::vector<ExperimentResult> run_sweep(const Experiment &e, const SweepOptions &options) {
    if (options.initial_shots < 1 || options.max_shots < options.initial_shots) {
        throw std::invalid_argument("Sweep needs 1 <= initial_shots <= max_shots");
    }
    std::vector<ExperimentResult> rows;
    for (size_t i = 0; i < options.ps.size(); i++) {
        double p = options.ps[i];
        NoiseModel noise{p, options.q_ratio * p};
        noise.validate();
        ExperimentResult row;
        row.p = noise.p;
        row.q = noise.q;
        uint64_t next = options.initial_shots;
        while (true) {
            uint64_t begin = row.n_total;
            row += e.run(noise, begin, begin + next, options.master_seed, i, options.threads);
            if (row.n_failure >= options.min_failures || row.n_total >= options.max_shots) {
                break;
            }
            next = std::min(row.n_total, options.max_shots - row.n_total);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> log_spaced(double lo, double hi, size_t count) {
    if (count == 0 || lo <= 0 || hi <= 0) {
        throw std::invalid_argument("log_spaced needs a positive range and count");
    }
    if (count == 1) {
        return {lo};
    }
    std::vector<double> out;
    for (size_t i = 0; i < count; i++) {
        out.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * double(i) / double(count - 1)));
    }
    out.back() = hi;
    return out;
}

std::string sweep_csv(const std::vector<ExperimentResult> &rows) {
    std::ostringstream out;
    out << "p,q,shots,n_postselected,n_failure,p_L,p_L_ci_lo,p_L_ci_hi,R,R_ci_lo,R_ci_hi\n";
    char buf[512];
    for (const auto &r : rows) {
        Interval pl = r.p_L_ci();
        Interval rr = r.R_ci();
        std::snprintf(buf, sizeof(buf), "%.6g,%.6g,%llu,%llu,%llu,%.9e,%.9e,%.9e,%.9e,%.9e,%.9e\n", r.p, r.q,
                      (unsigned long long)r.n_total, (unsigned long long)r.n_postselected,
                      (unsigned long long)r.n_failure, r.p_L(), pl.lo, pl.hi, r.R(), rr.lo, rr.hi);
        out << buf;
    }
    return out.str();
}

}  // namespace cs832
