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

// Command line front end.
//
//   cs832 prep --version 2 --state 000 --p 1e-3,1e-2 --shots 100000
//   cs832 switch --from 1 --to 2 --p 1e-3,1e-2 --shots 100000
//   cs832 hadamard --logical 1 --p 1e-3
//   cs832 grover --encoded --p 0
//   cs832 enumerate --circuit ghz8-ft
//   cs832 catalog --code v1
//
// Options live on the top level so a flat key = value config file
// (--config) can set any of them; command line flags override it.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cs832/experiments.h"
#include "cs832/protocol.h"

using namespace cs832;

namespace {

constexpr int EXIT_CONFIG = 2;

// Thrown for invalid selectors and output problems; reported with exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<double> ps = {1e-3};
    double q_ratio = 0.1;
    uint64_t shots = 100000;
    uint64_t min_failures = 0;
    uint64_t max_shots = 0;
    uint64_t seed = 0;
    size_t threads = 0;
    std::string output;
    int version = 1;
    std::string state = "+++";
    int from = 1;
    int to = 2;
    bool unflagged = false;
    size_t logical = 1;
    bool encoded = false;
    bool bare = false;
    std::string circuit = "ghz8-ft";
    std::string code = "v1";
};

std::filesystem::path output_dir(const Options &o) {
    std::string dir = o.output;
    if (dir.empty()) {
        const char *env = std::getenv("CS832_OUTPUT_DIR");
        dir = env && *env ? env : ".";
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw UsageError("cannot create output directory '" + dir + "': " + ec.message());
    }
    return dir;
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.flush();
    if (!out) {
        throw UsageError("cannot write '" + path.string() + "'");
    }
}

// File names avoid '+', which some tools treat specially.
std::string file_stem(std::string name) {
    for (char &c : name) {
        if (c == '+') {
            c = 'p';
        }
    }
    return name;
}

CodeVersion parse_version(int v) {
    if (v != 1 && v != 2) {
        throw UsageError("version must be 1 or 2, got " + std::to_string(v));
    }
    return v == 1 ? CodeVersion::V1 : CodeVersion::V2;
}

LogicalState parse_state(const std::string &s) {
    try {
        return parse_logical_state(s);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

void validate(const Options &o) {
    if (o.ps.empty()) {
        throw UsageError("at least one p value is required");
    }
    for (double p : o.ps) {
        if (!(p >= 0 && p <= 1)) {
            throw UsageError("p values must lie in [0, 1]");
        }
    }
    if (!(o.q_ratio >= 0 && o.q_ratio <= 1)) {
        throw UsageError("q-ratio must lie in [0, 1]");
    }
    if (o.shots < 1) {
        throw UsageError("shots must be at least 1");
    }
    if (o.max_shots != 0 && o.max_shots < o.shots) {
        throw UsageError("max-shots must be at least shots");
    }
}

int run_sweep_command(const ExperimentSpec &spec, const Options &o) {
    validate(o);
    Experiment e(spec);
    SweepOptions s;
    s.ps = o.ps;
    s.q_ratio = o.q_ratio;
    s.initial_shots = o.shots;
    s.min_failures = o.min_failures == 0 ? ~uint64_t{0} : o.min_failures;
    s.max_shots = o.min_failures == 0 ? o.shots : std::max(o.shots, o.max_shots);
    s.master_seed = o.seed;
    s.threads = o.threads;
    auto rows = run_sweep(e, s);
    std::filesystem::path path = output_dir(o) / (file_stem(spec.name()) + ".csv");
    write_file(path, sweep_csv(rows));
    std::printf("experiment: %s\n", spec.name().c_str());
    for (const auto &r : rows) {
        Interval pl = r.p_L_ci(), rr = r.R_ci();
        std::printf("p=%-10.4g shots=%-10llu acceptance=%.6f [%.6f, %.6f] failure=%.6g [%.3g, %.3g]\n", r.p,
                    (unsigned long long)r.n_total, r.R(), rr.lo, rr.hi, r.p_L(), pl.lo, pl.hi);
    }
    if (rows.size() >= 3) {
        try {
            ScalingFit f = fit_scaling(rows);
            std::printf("fit: p_L = %.4g * p^%.3f (r^2 %.4f)\n", f.prefactor, f.exponent, f.r_squared);
        } catch (const InsufficientFailures &) {
            std::printf("fit: not enough points with failures\n");
        }
    }
    std::printf("csv: %s\n", path.c_str());
    return 0;
}

std::string normalize(std::string name) {
    for (char &c : name) {
        c = c == '-' ? '_' : char(std::tolower(static_cast<unsigned char>(c)));
    }
    return name;
}

// Every circuit the certifier knows by name.
std::vector<ExperimentSpec> enumerable_specs() {
    std::vector<ExperimentSpec> out;
    const LogicalState states[] = {LogicalState::ZERO_ZERO_ZERO, LogicalState::PLUS_PLUS_PLUS,
                                   LogicalState::PLUS_PLUS_ZERO, LogicalState::ZERO_ZERO_PLUS};
    for (CodeVersion v : {CodeVersion::V1, CodeVersion::V2}) {
        for (LogicalState st : states) {
            ExperimentSpec s;
            s.kind = ExperimentKind::PREP;
            s.version = v;
            s.state = st;
            out.push_back(s);
        }
    }
    for (SwitchDirection d : {SwitchDirection::V1_TO_V2, SwitchDirection::V2_TO_V1}) {
        for (LogicalState st : states) {
            for (bool flagged : {true, false}) {
                ExperimentSpec s;
                s.kind = ExperimentKind::SWITCH;
                s.direction = d;
                s.state = st;
                s.flagged = flagged;
                out.push_back(s);
            }
        }
    }
    for (size_t j = 1; j <= 3; j++) {
        for (LogicalState st : states) {
            ExperimentSpec s;
            s.kind = ExperimentKind::HADAMARD;
            s.logical = j;
            s.state = st;
            out.push_back(s);
        }
    }
    return out;
}

int run_enumerate(const Options &o) {
    std::string want = normalize(o.circuit);
    Circuit c;
    Reference ref;
    bool found = false;
    if (want == "ghz8_ft" || want == "ghz8") {
        c = build_ghz(8, false, want == "ghz8_ft");
        ref = code_reference(code_for(CodeVersion::V2), "000", c.num_qubits());
        found = true;
    }
    for (const ExperimentSpec &s : enumerable_specs()) {
        if (!found && normalize(s.name()) == want) {
            Experiment e(s);
            c = e.circuit();
            ref = *e.reference();
            found = true;
        }
    }
    if (!found) {
        std::string names = "ghz8-ft, ghz8";
        for (const ExperimentSpec &s : enumerable_specs()) {
            names += ", " + s.name();
        }
        throw UsageError("unknown circuit '" + o.circuit + "'; known: " + names);
    }
    FaultReport r = enumerate_faults(c, ref, o.threads);
    std::filesystem::path path = output_dir(o) / ("enumerate_" + file_stem(want) + ".csv");
    write_file(path, r.csv(c));
    std::printf("circuit: %s\n", want.c_str());
    std::printf("total_sites: %zu\n", r.total_sites);
    std::printf("detected: %zu\n", r.detected);
    std::printf("benign: %zu\n", r.benign);
    std::printf("logical_failures: %zu\n", r.logical_failures.size());
    for (const FaultSite &f : r.logical_failures) {
        std::printf("  op %zu (%s): %s\n", f.op_index, c.ops()[f.op_index].str().c_str(), f.fault.str().c_str());
    }
    std::printf("csv: %s\n", path.c_str());
    return 0;
}

int run_catalog(const Options &o) {
    std::string which = normalize(o.code);
    CodeDefinition code;
    if (which == "v1" || which == "1") {
        code = code_for(CodeVersion::V1);
    } else if (which == "v2" || which == "2") {
        code = code_for(CodeVersion::V2);
    } else if (which == "subsystem") {
        code = subsystem_code();
    } else if (which == "parent") {
        code = parent_code();
    } else {
        throw UsageError("unknown code '" + o.code + "'; use v1, v2, subsystem or parent");
    }
    std::fputs(code.catalog().c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Code switching between the two [[8,3,2]] color code versions"};
    app.set_config("--config", "", "Flat key = value configuration file");
    app.require_subcommand(1);
    Options o;

    app.add_option("--p", o.ps, "Comma separated physical error rates")->delimiter(',');
    app.add_option("--q-ratio", o.q_ratio, "Single qubit rate as a fraction of p")->capture_default_str();
    app.add_option("--shots", o.shots, "Shots per point (initial shots when --min-failures is set)")
        ->capture_default_str();
    app.add_option("--min-failures", o.min_failures, "Double the shots until this many failures (0 = off)");
    app.add_option("--max-shots", o.max_shots, "Shot cap when --min-failures is set");
    app.add_option("--seed", o.seed, "Master seed")->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--output", o.output, "Output directory (default $CS832_OUTPUT_DIR or .)");
    app.add_option("--version", o.version, "Code version for prep (1 or 2)")->capture_default_str();
    app.add_option("--state", o.state, "Logical state: 000, +++, ++0 or 00+")->capture_default_str();
    app.add_option("--from", o.from, "Switching source version")->capture_default_str();
    app.add_option("--to", o.to, "Switching target version")->capture_default_str();
    app.add_flag("--unflagged", o.unflagged, "Strip the flag qubits from the switching circuit");
    app.add_option("--logical", o.logical, "Logical qubit of the Hadamard (1..3)")->capture_default_str();
    app.add_flag("--encoded", o.encoded, "Encoded Grover circuit");
    app.add_flag("--bare", o.bare, "Unencoded Grover circuit (default)");
    app.add_option("--circuit", o.circuit, "Circuit to certify, e.g. ghz8-ft or switch_1to2_+++")
        ->capture_default_str();
    app.add_option("--code", o.code, "Code to print: v1, v2, subsystem or parent")->capture_default_str();

    auto sub = [&](const char *name, const char *help) {
        CLI::App *s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };
    CLI::App *prep = sub("prep", "Monte Carlo of a logical state preparation");
    CLI::App *sw = sub("switch", "Monte Carlo of a code switch after preparation");
    CLI::App *had = sub("hadamard", "Monte Carlo of the gadget logical Hadamard");
    CLI::App *grover = sub("grover", "Monte Carlo of the Grover search");
    CLI::App *en = sub("enumerate", "Exhaustive single fault certification");
    CLI::App *cat = sub("catalog", "Print a code's stabilizers, logicals and gauge operators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_CONFIG;
    }

    try {
        ExperimentSpec spec;
        if (prep->parsed()) {
            spec.kind = ExperimentKind::PREP;
            spec.version = parse_version(o.version);
            spec.state = parse_state(o.state);
            return run_sweep_command(spec, o);
        }
        if (sw->parsed()) {
            CodeVersion from = parse_version(o.from), to = parse_version(o.to);
            if (from == to) {
                throw UsageError("--from and --to must differ");
            }
            spec.kind = ExperimentKind::SWITCH;
            spec.direction = from == CodeVersion::V1 ? SwitchDirection::V1_TO_V2 : SwitchDirection::V2_TO_V1;
            spec.state = parse_state(o.state);
            spec.flagged = !o.unflagged;
            return run_sweep_command(spec, o);
        }
        if (had->parsed()) {
            if (o.logical < 1 || o.logical > 3) {
                throw UsageError("--logical must be 1, 2 or 3");
            }
            spec.kind = ExperimentKind::HADAMARD;
            spec.logical = o.logical;
            spec.state = parse_state(o.state);
            return run_sweep_command(spec, o);
        }
        if (grover->parsed()) {
            if (o.encoded && o.bare) {
                throw UsageError("--encoded and --bare are exclusive");
            }
            spec.kind = ExperimentKind::GROVER;
            spec.encoded = o.encoded;
            return run_sweep_command(spec, o);
        }
        if (en->parsed()) {
            return run_enumerate(o);
        }
        if (cat->parsed()) {
            return run_catalog(o);
        }
    } catch (const UsageError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return EXIT_CONFIG;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return EXIT_CONFIG;
}
