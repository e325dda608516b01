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

/**
 * @file
 * Monte-Carlo study of the logical swap gate under Gaussian pulse-area noise.
 *
 * Every pulse of the 15-pulse swap gets its own deviation dt ~ N(0, eps^2),
 * with eps the standard deviation. Per trial:
 *   - P_S = |1 - |<j|psi_i(T)>|^2| for one uniformly drawn logical basis
 *     state i, j its ideal-swap image;
 *   - Q_S = max over pairs of the wrapped difference of arg<j_b|psi_b(T)>,
 *     all four basis states evolved under the same perturbed sequence.
 *
 * Trial (e, r) draws from its own generator seeded from (seed, e, r), and
 * aggregation runs in trial order, so results do not depend on thread count.
 */

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hgates/encoding.hpp"
#include "hgates/error.hpp"
#include "hgates/gates.hpp"
#include "hgates/linalg.hpp"
#include "hgates/pulse.hpp"
#include "hgates/spin_model.hpp"

namespace hgates {

struct NoiseModel {
    double epsilon = 0.0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent generator for trial `trial` at grid point `point`.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t point, std::uint64_t trial) {
    const std::uint64_t s = splitmix64(splitmix64(splitmix64(seed) ^ point) ^ trial);
    std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
    return std::mt19937_64(seq);
}

/// Adds an independent N(0, eps^2) deviation to every pulse duration. Durations
/// may go negative. eps = 0 returns the sequence untouched and draws nothing.
template <class Rng>
PulseSequence perturb(const PulseSequence &seq, const NoiseModel &noise, Rng &rng) {
    detail::require(noise.epsilon >= 0.0 && std::isfinite(noise.epsilon),
                    "perturb: epsilon must be finite and >= 0");
    if (noise.epsilon == 0.0) {
        return seq;
    }
    std::normal_distribution<double> dist(0.0, noise.epsilon);
    PulseSequence out = seq;
    for (auto &p : out.pulses) {
        p.duration += dist(rng);
        p.tag.clear();
    }
    return out;
}

inline constexpr double kPhaseUndefinedOverlap = 1e-6;

struct PhaseErrorResult {
    double value = 0.0;
    bool defined = true;
};

/// Outcome of one perturbed swap applied to all four logical basis states.
struct SwapEvaluation {
    /// <j_b|psi_b(T)> with j_b the ideal-swap image of basis state b.
    std::array<Complex, 4> overlaps{};
    /// max over b of | ||psi_b(T)||^2 - 1 |
    double norm_deviation = 0.0;

    [[nodiscard]] double probability_error(std::size_t i) const {
        detail::require(i < 4, "probability_error: logical index must be 0..3");
        return std::abs(std::norm(overlaps[i]) - 1.0);
    }

    [[nodiscard]] PhaseErrorResult phase_error() const {
        for (const auto &z : overlaps) {
            if (std::abs(z) < kPhaseUndefinedOverlap) {
                return {std::numeric_limits<double>::quiet_NaN(), false};
            }
        }
        double worst = 0.0;
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = a + 1; b < 4; ++b) {
                worst = std::max(
                    worst, std::abs(wrap_angle(std::arg(overlaps[a]) - std::arg(overlaps[b]))));
            }
        }
        return {worst, true};
    }

    [[nodiscard]] std::array<double, 4> phases() const {
        std::array<double, 4> out{};
        for (std::size_t b = 0; b < 4; ++b) {
            out[b] = std::arg(overlaps[b]);
        }
        return out;
    }
};

struct TrialResult {
    std::size_t initial_index = 0;
    double probability_error = 0.0;
    std::array<double, 4> phases{};
    double phase_error = 0.0;
    bool phase_defined = true;
    double norm_deviation = 0.0;
};

/// Swap-gate evaluator in the 15-dimensional two-excitation sector. Immutable
/// after construction; share one instance across threads.
class SwapErrorLab {
  public:
    SwapErrorLab()
        : frame_(logical_basis_15()), props_(frame_.subspace), ideal_(swap_sequence()) {}

    [[nodiscard]] const PulseSequence &ideal_sequence() const noexcept { return ideal_; }
    [[nodiscard]] const LogicalFrame &frame() const noexcept { return frame_; }
    [[nodiscard]] const BondPropagators &propagators() const noexcept { return props_; }

    [[nodiscard]] ComplexState final_state(std::size_t i, const PulseSequence &seq) const {
        detail::require(i < 4, "final_state: logical index must be 0..3");
        return props_.evolve(seq, frame_.states[i]);
    }

    [[nodiscard]] SwapEvaluation evaluate(const PulseSequence &seq) const {
        SwapEvaluation ev;
        for (std::size_t b = 0; b < 4; ++b) {
            const ComplexState out = props_.evolve(seq, frame_.states[b]);
            ev.overlaps[b] = inner(frame_.states[swap_image(b)], out);
            ev.norm_deviation = std::max(ev.norm_deviation, std::abs(out.norm_squared() - 1.0));
        }
        return ev;
    }

    [[nodiscard]] double probability_error(std::size_t i, const PulseSequence &seq) const {
        detail::require(i < 4, "probability_error: logical index must be 0..3");
        const ComplexState out = final_state(i, seq);
        return std::abs(std::norm(inner(frame_.states[swap_image(i)], out)) - 1.0);
    }

    [[nodiscard]] PhaseErrorResult phase_error(const PulseSequence &seq) const {
        return evaluate(seq).phase_error();
    }

    /// One Monte-Carlo trial: initial state first, then the pulse deviations.
    template <class Rng>
    [[nodiscard]] TrialResult run_trial(double epsilon, Rng &rng) const {
        TrialResult r;
        r.initial_index = static_cast<std::size_t>(rng() >> 62);
        const PulseSequence noisy = perturb(ideal_, NoiseModel{epsilon, 0}, rng);
        const SwapEvaluation ev = evaluate(noisy);
        r.probability_error = ev.probability_error(r.initial_index);
        const PhaseErrorResult q = ev.phase_error();
        r.phase_error = q.value;
        r.phase_defined = q.defined;
        r.phases = ev.phases();
        r.norm_deviation = ev.norm_deviation;
        return r;
    }

  private:
    LogicalFrame frame_;
    BondPropagators props_;
    PulseSequence ideal_;
};

inline const SwapErrorLab &default_swap_lab() {
    static const SwapErrorLab lab;
    return lab;
}

inline double probability_error(std::size_t i, const PulseSequence &perturbed) {
    return default_swap_lab().probability_error(i, perturbed);
}

inline PhaseErrorResult phase_error(const PulseSequence &perturbed) {
    return default_swap_lab().phase_error(perturbed);
}

struct SweepPoint {
    double epsilon = 0.0;
    std::size_t n_runs = 0;
    double mean_P = 0.0;
    double std_P = 0.0;
    double stderr_P = 0.0;
    double mean_Q = 0.0;
    double std_Q = 0.0;
    double stderr_Q = 0.0;
    /// Trials whose phase error was undefined; left out of the Q statistics.
    std::size_t excluded_trials = 0;
    double max_norm_deviation = 0.0;
};

namespace detail {

/// Neumaier-compensated running sum.
class CompensatedSum {
  public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct Moments {
    double mean = 0.0;
    double stddev = 0.0;
    double stderr_ = 0.0;
};

inline Moments moments(const std::vector<double> &xs) {
    const auto n = static_cast<double>(xs.size());
    if (xs.empty()) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return {nan, nan, nan};
    }
    CompensatedSum s;
    for (double x : xs) {
        s.add(x);
    }
    const double mean = s.value() / n;
    if (xs.size() < 2) {
        return {mean, 0.0, 0.0};
    }
    CompensatedSum ss;
    for (double x : xs) {
        ss.add((x - mean) * (x - mean));
    }
    const double sd = std::sqrt(ss.value() / (n - 1.0));
    return {mean, sd, sd / std::sqrt(n)};
}

} // namespace detail

/// `n` log-spaced values from lo to hi inclusive.
inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    detail::require(lo > 0.0 && hi >= lo, "log_grid: need 0 < lo <= hi");
    detail::require(n >= 1, "log_grid: need at least one point");
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = std::pow(10.0, a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

/// 8 points, 1e-4 .. 1e-2.
inline std::vector<double> default_epsilon_grid() { return log_grid(1e-4, 1e-2, 8); }

inline constexpr std::size_t kDefaultRuns = 1000;
inline constexpr std::uint64_t kDefaultSeed = 20260214;

struct SweepOptions {
    /// 0 = std::thread::hardware_concurrency().
    unsigned threads = 1;
};

inline std::vector<TrialResult> run_trials(const SwapErrorLab &lab, double epsilon,
                                           std::size_t point_index, std::size_t n_runs,
                                           std::uint64_t seed, unsigned threads) {
    std::vector<TrialResult> results(n_runs);
    const auto work = [&](std::size_t r) {
        auto rng = trial_rng(seed, point_index, r);
        results[r] = lab.run_trial(epsilon, rng);
    };
    if (threads <= 1 || n_runs < 2) {
        for (std::size_t r = 0; r < n_runs; ++r) {
            work(r);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t r = next++; r < n_runs; r = next++) {
                work(r);
            }
        });
    }
    pool.clear();
    return results;
}

inline SweepPoint aggregate(double epsilon, const std::vector<TrialResult> &trials) {
    SweepPoint pt;
    pt.epsilon = epsilon;
    pt.n_runs = trials.size();
    std::vector<double> p;
    std::vector<double> q;
    p.reserve(trials.size());
    q.reserve(trials.size());
    for (const auto &t : trials) {
        p.push_back(t.probability_error);
        if (t.phase_defined) {
            q.push_back(t.phase_error);
        } else {
            ++pt.excluded_trials;
        }
        pt.max_norm_deviation = std::max(pt.max_norm_deviation, t.norm_deviation);
    }
    const auto mp = detail::moments(p);
    const auto mq = detail::moments(q);
    pt.mean_P = mp.mean;
    pt.std_P = mp.stddev;
    pt.stderr_P = mp.stderr_;
    pt.mean_Q = mq.mean;
    pt.std_Q = mq.stddev;
    pt.stderr_Q = mq.stderr_;
    return pt;
}

inline std::vector<SweepPoint> sweep(const std::vector<double> &eps_grid, std::size_t n_runs,
                                     std::uint64_t seed, SweepOptions opts = {}) {
    detail::require(n_runs >= 2, "sweep: n_runs must be at least 2");
    for (double e : eps_grid) {
        detail::require(e >= 0.0 && std::isfinite(e), "sweep: every epsilon must be >= 0");
    }
    unsigned threads = opts.threads;
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    const SwapErrorLab &lab = default_swap_lab();
    std::vector<SweepPoint> out;
    out.reserve(eps_grid.size());
    for (std::size_t e = 0; e < eps_grid.size(); ++e) {
        out.push_back(aggregate(eps_grid[e], run_trials(lab, eps_grid[e], e, n_runs, seed, threads)));
    }
    return out;
}

enum class Channel { P, Q };

inline const char *to_string(Channel c) { return c == Channel::P ? "P" : "Q"; }

struct PowerFit {
    Channel channel = Channel::P;
    /// y = amplitude * eps^exponent
    double amplitude = 0.0;
    double exponent = 0.0;
    double chi2 = 0.0;
    std::size_t n_points = 0;
    std::vector<std::string> warnings;

    [[nodiscard]] double operator()(double eps) const { return amplitude * std::pow(eps, exponent); }
};

/// Least squares on (ln eps, ln mean). chi^2 = sum (y_k - fit_k)^2 / stderr_k^2.
inline PowerFit fit_power_law(const std::vector<SweepPoint> &points, Channel channel) {
    PowerFit fit;
    fit.channel = channel;
    struct Sample {
        double eps, y, dy;
    };
    std::vector<Sample> used;
    for (const auto &pt : points) {
        const double y = channel == Channel::P ? pt.mean_P : pt.mean_Q;
        const double dy = channel == Channel::P ? pt.stderr_P : pt.stderr_Q;
        if (!(y > 0.0) || !std::isfinite(y) || !(pt.epsilon > 0.0)) {
            fit.warnings.push_back("excluded epsilon=" + detail::decimal17(pt.epsilon) +
                                   ": mean is not positive");
            continue;
        }
        used.push_back({pt.epsilon, y, dy});
    }
    detail::require(used.size() >= 3, std::string("fit_power_law(") + to_string(channel) +
                                          "): need at least 3 points with positive mean, have " +
                                          std::to_string(used.size()));

    detail::CompensatedSum sx, sy;
    for (const auto &s : used) {
        sx.add(std::log(s.eps));
        sy.add(std::log(s.y));
    }
    const auto n = static_cast<double>(used.size());
    const double mx = sx.value() / n;
    const double my = sy.value() / n;
    detail::CompensatedSum sxx, sxy;
    for (const auto &s : used) {
        const double dx = std::log(s.eps) - mx;
        sxx.add(dx * dx);
        sxy.add(dx * (std::log(s.y) - my));
    }
    detail::require(sxx.value() > 0.0, "fit_power_law: epsilon values are all equal");
    fit.exponent = sxy.value() / sxx.value();
    fit.amplitude = std::exp(my - fit.exponent * mx);
    fit.n_points = used.size();

    detail::CompensatedSum chi2;
    for (const auto &s : used) {
        const double r = s.y - fit(s.eps);
        if (s.dy > 0.0) {
            chi2.add(r * r / (s.dy * s.dy));
        } else if (r != 0.0) {
            chi2.add(std::numeric_limits<double>::infinity());
        }
    }
    fit.chi2 = chi2.value();
    return fit;
}

/// Reference fits and the acceptance windows around them.
namespace reference {
inline constexpr double probability_amplitude = 3.183e3;
inline constexpr double probability_exponent = 3.998;
inline constexpr double phase_amplitude = 10.2033;
inline constexpr double phase_exponent = 1.0031;

inline constexpr double probability_exponent_lo = 3.8;
inline constexpr double probability_exponent_hi = 4.2;
inline constexpr double probability_amplitude_factor = 2.0;
inline constexpr double phase_exponent_lo = 0.95;
inline constexpr double phase_exponent_hi = 1.05;
inline constexpr double phase_amplitude_lo = 8.7;
inline constexpr double phase_amplitude_hi = 11.7;

/// Below this many runs per point the bands are not meaningful.
inline constexpr std::size_t min_runs_for_bands = 1000;
} // namespace reference

struct BandCheck {
    bool exponent_ok = false;
    bool amplitude_ok = false;
    [[nodiscard]] bool ok() const noexcept { return exponent_ok && amplitude_ok; }
};

inline BandCheck check_bands(const PowerFit &fit) {
    using namespace reference;
    BandCheck c;
    if (fit.channel == Channel::P) {
        c.exponent_ok =
            fit.exponent >= probability_exponent_lo && fit.exponent <= probability_exponent_hi;
        c.amplitude_ok = fit.amplitude >= probability_amplitude / probability_amplitude_factor &&
                         fit.amplitude <= probability_amplitude * probability_amplitude_factor;
    } else {
        c.exponent_ok = fit.exponent >= phase_exponent_lo && fit.exponent <= phase_exponent_hi;
        c.amplitude_ok = fit.amplitude >= phase_amplitude_lo && fit.amplitude <= phase_amplitude_hi;
    }
    return c;
}

} // namespace hgates
