#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seclab/irs.hpp"
#include "seclab/result_table.hpp"

namespace seclab {

struct SecrecyOutcome {
    double rate_main = 0.0;    // C_b, bits/s/Hz
    double rate_eve = 0.0;     // C_e, bits/s/Hz
    double secrecy_rate = 0.0; // max(0, C_b - C_e)
};

// power |channel|^2 / noise
double snr(cplx channel, double power_w, double noise_w);

// max(0, log2(1+gamma_b) - log2(1+gamma_e))
double secrecy_rate(double gamma_b, double gamma_e);

struct PhaseOptimizerOptions {
    int restarts = 8;          // random initializations on top of the
                               // zero-phase and Bob-aligned ones
    int grid_points = 256;     // 1-D line search grid per element
    double tol_bits = 1e-6;    // stop when a sweep improves R_s less than this
    int max_sweeps = 50;
    std::optional<int> phase_bits; // restrict search to the quantized grid
    std::vector<double> beta;      // per-element amplitudes; empty = all 1
    std::optional<std::vector<double>> initial_theta; // extra initialization
    std::uint64_t seed = 0;        // drives the random restarts
};

struct SecrecyResult {
    IrsConfig config;
    SecrecyOutcome outcome;
};

// Element-wise coordinate ascent on the phase shifts, maximizing the
// secrecy rate of the given realization. Amplitudes are held fixed.
SecrecyResult optimize_phases_secrecy(const ChannelSet& channels,
                                      const Scenario& scenario,
                                      const PhaseOptimizerOptions& options = {});

// Closed-form phases maximizing the main-channel rate alone:
// theta_n = arg(h_ab) - arg(h_ai_n h_ib_n).
IrsConfig align_phases_for_bob(const ChannelSet& channels,
                               const std::vector<double>& beta = {});

SecrecyOutcome evaluate_config(const ChannelSet& channels,
                               const Scenario& scenario,
                               const IrsConfig& config);

struct SecrecyTrial {
    double secrecy_rate; // optimized
    double main_rate;    // Bob-aligned phases, no secrecy consideration
};

// One Monte-Carlo trial at a given element count; deterministic in the seed.
SecrecyTrial secrecy_trial(Scenario scenario, std::size_t n_elements,
                           std::uint64_t seed,
                           const PhaseOptimizerOptions& options = {});

// Columns: n_elements, avg_secrecy_rate, avg_main_rate. Trial t of sweep
// point i uses seed derive_seed(root_seed, i, t); accumulation is in trial
// order, so the result is independent of the execution schedule.
ResultTable avg_secrecy_curve(const Scenario& scenario_template,
                              const std::vector<std::size_t>& n_values,
                              std::size_t trials, std::uint64_t root_seed,
                              const PhaseOptimizerOptions& options = {},
                              int threads = 1);

} // namespace seclab
