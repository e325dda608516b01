// Copyright 2026 The heisenberg-gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hgates: verify, simulate, sweep, fit and export-schedule.
//
// Exit status: 0 success, 1 verification failure, 2 invalid input.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgates/hgates.hpp"

namespace {

using namespace hgates;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;

constexpr double kCliNormTolerance = 1e-9;
constexpr const char *kSeedEnv = "HGATES_SEED";

std::string fmt17(double x) { return detail::decimal17(x); }

Qubit parse_qubit(const std::string &s) {
    if (s == "A" || s == "a") return Qubit::A;
    if (s == "B" || s == "b") return Qubit::B;
    detail::fail("qubit must be A or B, got '" + s + "'");
}

Complex parse_complex(const std::string &s) {
    const auto comma = s.find(',');
    detail::require(comma != std::string::npos, "amplitude '" + s + "' is not of the form re,im");
    try {
        std::size_t u1 = 0;
        std::size_t u2 = 0;
        const double re = std::stod(s.substr(0, comma), &u1);
        const std::string im_s = s.substr(comma + 1);
        const double im = std::stod(im_s, &u2);
        detail::require(u1 == comma && u2 == im_s.size() && std::isfinite(re) && std::isfinite(im),
                        "bad amplitude '" + s + "'");
        return {re, im};
    } catch (const std::logic_error &) {
        detail::fail("bad amplitude '" + s + "'");
    }
}

/// Parses and renormalizes; rejects inputs further than 1e-9 from unit norm.
ComplexState parse_logical_state(const std::vector<std::string> &tokens) {
    ComplexState s(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        s[i] = parse_complex(tokens[i]);
    }
    const double n = s.norm();
    detail::require(std::abs(n - 1.0) <= kCliNormTolerance,
                    "logical amplitudes are not normalized (norm " + fmt17(n) + ")");
    s *= 1.0 / n;
    return s;
}

std::vector<double> parse_eps_range(const std::string &spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string p;
    while (std::getline(ss, p, ':')) {
        parts.push_back(p);
    }
    detail::require(parts.size() == 3, "--eps-range expects lo:hi:n");
    try {
        return log_grid(std::stod(parts[0]), std::stod(parts[1]), std::stoul(parts[2]));
    } catch (const std::logic_error &) {
        detail::fail("--eps-range expects numbers, got '" + spec + "'");
    }
}

struct SeedChoice {
    std::uint64_t value = kDefaultSeed;
    std::string source = "default";
};

SeedChoice resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) {
        return {*flag, "flag"};
    }
    if (const char *env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const std::uint64_t v = std::stoull(env, &used);
            detail::require(used == std::string(env).size(), "trailing characters");
            return {v, std::string("env ") + kSeedEnv};
        } catch (const std::exception &) {
            detail::fail(std::string(kSeedEnv) + " is not an unsigned integer");
        }
    }
    return {};
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    detail::require(static_cast<bool>(out), "cannot open '" + path + "' for writing");
    out << text;
    detail::require(static_cast<bool>(out), "failed writing '" + path + "'");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    detail::require(static_cast<bool>(in), "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string check;
    std::optional<double> corrupt_t2;
};

int cmd_verify(const VerifyArgs &args) {
    VerifyOptions opts;
    if (!args.check.empty()) {
        opts.only = args.check;
    }
    if (args.corrupt_t2) {
        opts.timings.t2 = *args.corrupt_t2;
        std::cout << "# debug: t2 overridden to " << fmt17(*args.corrupt_t2) << "\n";
    }
    const auto results = run_verification(opts);
    bool all_ok = true;
    double worst = 0.0;
    for (const auto &r : results) {
        all_ok = all_ok && r.passed;
        worst = std::max(worst, r.max_error);
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  max_error=" << fmt17(r.max_error)
                  << "  tol=" << fmt17(r.tolerance);
        if (!r.detail.empty()) {
            std::cout << "  " << r.detail;
        }
        std::cout << "\n";
    }
    std::cout << (all_ok ? "all checks passed" : "verification FAILED") << "; max residual "
              << fmt17(worst) << "\n";
    return all_ok ? kExitOk : kExitVerifyFailed;
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
    std::string gate;
    std::string qubit = "A";
    double theta = 0.0;
    std::vector<std::string> state;
    bool degrees = false;
};

int cmd_simulate(const SimulateArgs &args) {
    const GateSpec spec{parse_gate_kind(args.gate), parse_qubit(args.qubit), args.theta};
    const PulseSequence seq = catalog_sequence(spec);
    const ComplexState logical = parse_logical_state(args.state);

    const bool two_qubit_gate = spec.kind == GateKind::Swap ||
                                spec.kind == GateKind::CyclicPermutation || spec.qubit == Qubit::B;
    detail::require(logical.dim() == 4 || (logical.dim() == 2 && !two_qubit_gate),
                    two_qubit_gate ? "this gate needs 4 logical amplitudes (|0B0A> |0B1A> |1B0A> |1B1A>)"
                                   : "expected 2 (qubit A alone) or 4 logical amplitudes");
    const LogicalFrame frame = logical.dim() == 2 ? logical_basis_a() : logical_basis_15();
    const ComplexState out = simulate(seq, encode(logical, frame), frame.subspace);
    const DecodedState d = decode(out, frame);

    const double angle_scale = args.degrees ? 180.0 / std::numbers::pi : 1.0;
    const char *unit = args.degrees ? "deg" : "rad";
    std::cout << "gate " << seq.name << " (" << seq.size() << " pulses): " << to_operator_string(seq)
              << "\n";
    switch (spec.kind) {
    case GateKind::Flip:
        std::cout << "Phi_F = " << fmt17(analytic::flip_phase * angle_scale) << " " << unit << "\n";
        break;
    case GateKind::Hadamard:
        std::cout << "global phase = " << fmt17(analytic::hadamard_phase * angle_scale) << " " << unit
                  << "\n";
        break;
    case GateKind::Phase:
        std::cout << "Phi_P(theta) = " << fmt17(analytic::phase_gate_phase(spec.theta) * angle_scale)
                  << " " << unit << "\n";
        break;
    case GateKind::Swap:
        std::cout << "overall phase = " << fmt17(analytic::swap_phase * angle_scale) << " " << unit
                  << "\n";
        break;
    case GateKind::CyclicPermutation:
        break;
    }
    std::cout << "index label re im modulus phase[" << unit << "]\n";
    for (std::size_t i = 0; i < frame.n_logical; ++i) {
        const Complex c = d.amplitudes[i];
        std::cout << i << " " << frame.labels[i] << " " << fmt17(c.real()) << " " << fmt17(c.imag())
                  << " " << fmt17(std::abs(c)) << " " << fmt17(std::arg(c) * angle_scale) << "\n";
    }
    std::cout << "leakage " << fmt17(d.reported_leakage()) << "\n";
    return kExitOk;
}

// ---- sweep / fit ------------------------------------------------------------

void report_fits(const std::vector<SweepPoint> &pts, std::size_t n_runs, std::optional<std::uint64_t> seed,
                 const std::string &fit_out) {
    std::string fits;
    const bool low_stats = n_runs < reference::min_runs_for_bands;
    if (low_stats) {
        std::cout << "# warning: n_runs=" << n_runs << " is below " << reference::min_runs_for_bands
                  << "; low statistics, acceptance bands not asserted\n";
    }
    for (Channel ch : {Channel::P, Channel::Q}) {
        try {
            const PowerFit fit = fit_power_law(pts, ch);
            for (const auto &w : fit.warnings) {
                std::cout << "# warning: " << w << "\n";
            }
            const std::string line = write_fit(fit, seed);
            fits += line + "\n";
            std::cout << "# fit " << line << "\n";
            if (!low_stats) {
                const BandCheck band = check_bands(fit);
                std::cout << "# " << to_string(ch) << " exponent " << fmt17(fit.exponent)
                          << (band.exponent_ok ? " inside" : " OUTSIDE") << " acceptance band, amplitude "
                          << fmt17(fit.amplitude) << (band.amplitude_ok ? " inside" : " OUTSIDE")
                          << " acceptance band\n";
            }
        } catch (const Error &e) {
            std::cout << "# fit refused: " << e.what() << "\n";
        }
    }
    if (!fit_out.empty()) {
        write_output(fit_out, fits);
    }
}

struct SweepArgs {
    std::vector<double> eps;
    std::string eps_range;
    std::size_t n_runs = kDefaultRuns;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    std::string out;
    std::string format = "csv";
    std::string fit_out;
    bool no_fit = false;
};

std::string format_table(const std::vector<SweepPoint> &pts) {
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-12s %6s %-12s %-12s %-12s %-12s %s\n", "epsilon", "runs", "mean_P",
                  "stderr_P", "mean_Q", "stderr_Q", "excluded");
    os << buf;
    for (const auto &p : pts) {
        std::snprintf(buf, sizeof buf, "%-12.4e %6zu %-12.4e %-12.4e %-12.4e %-12.4e %zu\n", p.epsilon,
                      p.n_runs, p.mean_P, p.stderr_P, p.mean_Q, p.stderr_Q, p.excluded_trials);
        os << buf;
    }
    return os.str();
}

int cmd_sweep(const SweepArgs &args) {
    detail::require(args.format == "csv" || args.format == "table", "--format must be csv or table");
    detail::require(args.n_runs >= 1, "--n-runs must be at least 1");
    std::vector<double> grid = args.eps;
    if (!args.eps_range.empty()) {
        detail::require(grid.empty(), "give either --eps or --eps-range, not both");
        grid = parse_eps_range(args.eps_range);
    }
    if (grid.empty()) {
        grid = default_epsilon_grid();
    }
    const SeedChoice seed = resolve_seed(args.seed);
    const auto pts = sweep(grid, args.n_runs, seed.value, {args.threads});

    const std::string body = args.format == "csv" ? write_sweep_csv(pts) : format_table(pts);
    write_output(args.out, body);
    std::cout << "# seed=" << seed.value << " (" << seed.source << ") n_runs=" << args.n_runs
              << " points=" << grid.size() << "\n";
    if (!args.no_fit) {
        report_fits(pts, args.n_runs, seed.value, args.fit_out);
    }
    return kExitOk;
}

struct FitArgs {
    std::string in;
    std::string fit_out;
};

int cmd_fit(const FitArgs &args) {
    const auto pts = parse_sweep_csv(read_file(args.in));
    detail::require(!pts.empty(), "no sweep points in '" + args.in + "'");
    std::size_t n_runs = pts.front().n_runs;
    for (const auto &p : pts) {
        n_runs = std::min(n_runs, p.n_runs);
    }
    report_fits(pts, n_runs, std::nullopt, args.fit_out);
    return kExitOk;
}

// ---- export-schedule --------------------------------------------------------

struct ExportArgs {
    std::string gate;
    std::string qubit = "A";
    double theta = 0.0;
    std::string out;
};

int cmd_export(const ExportArgs &args) {
    const GateSpec spec{parse_gate_kind(args.gate), parse_qubit(args.qubit), args.theta};
    write_output(args.out, write_schedule(catalog_sequence(spec)));
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Encoded-qubit gates on a Heisenberg spin chain: verification, simulation and "
                 "pulse-error sweeps"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "INI file; [verify], [simulate], [sweep], [fit] and [export-schedule] "
                                   "sections hold key=value pairs named after the long flags");

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Run the analytic verification suite");
    verify->add_option("--check", va.check, "Run a single named check")
        ->check(CLI::IsMember(verification_check_names()));
    verify->add_option("--corrupt-t2", va.corrupt_t2, "Debug: override t2 to build a negative control");

    SimulateArgs sa;
    auto *sim = app.add_subcommand("simulate", "Apply a catalog gate to logical amplitudes");
    sim->add_option("--gate", sa.gate, "F, H, P, SWAP or C50")->required();
    sim->add_option("--qubit", sa.qubit, "Target qubit for F/H/P (A or B)");
    sim->add_option("--theta", sa.theta, "Phase-gate angle in [0, 2pi]");
    sim->add_option("--state", sa.state, "Logical amplitudes as re,im pairs")->required();
    sim->add_flag("--degrees", sa.degrees, "Print phases in degrees");

    SweepArgs wa;
    auto *sw = app.add_subcommand("sweep", "Monte-Carlo pulse-error sweep of the swap gate");
    sw->add_option("--eps", wa.eps, "Explicit epsilon values");
    sw->add_option("--eps-range", wa.eps_range, "Log-spaced grid lo:hi:n");
    sw->add_option("--n-runs", wa.n_runs, "Trials per epsilon");
    sw->add_option("--seed", wa.seed, std::string("RNG seed (default: $") + kSeedEnv + " or built-in)");
    sw->add_option("--threads", wa.threads, "Worker threads, 0 = all cores");
    sw->add_option("--out", wa.out, "Output path (default stdout)");
    sw->add_option("--format", wa.format, "csv or table");
    sw->add_option("--fit-out", wa.fit_out, "Write the two fit records to this file");
    sw->add_flag("--no-fit", wa.no_fit, "Skip the power-law fits");

    FitArgs fa;
    auto *fit = app.add_subcommand("fit", "Re-fit an existing sweep CSV");
    fit->add_option("--in", fa.in, "Sweep CSV")->required();
    fit->add_option("--fit-out", fa.fit_out, "Write the two fit records to this file");

    ExportArgs ea;
    auto *ex = app.add_subcommand("export-schedule", "Write a gate's pulse schedule");
    ex->add_option("--gate", ea.gate, "F, H, P, SWAP or C50")->required();
    ex->add_option("--qubit", ea.qubit, "Target qubit for F/H/P (A or B)");
    ex->add_option("--theta", ea.theta, "Phase-gate angle in [0, 2pi]");
    ex->add_option("--out", ea.out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*verify) return cmd_verify(va);
        if (*sim) return cmd_simulate(sa);
        if (*sw) return cmd_sweep(wa);
        if (*fit) return cmd_fit(fa);
        if (*ex) return cmd_export(ea);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
