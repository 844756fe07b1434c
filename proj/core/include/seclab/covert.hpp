#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seclab/detector.hpp"
#include "seclab/irs.hpp"
#include "seclab/result_table.hpp"

namespace seclab {

struct CovertnessParams {
    double epsilon = 0.1;        // required detection error >= 1 - epsilon
    std::int64_t blocklength = 100; // warden observations per decision

    void validate() const;
};

struct CovertDesign {
    double power_w = 0.0;
    IrsConfig config;
    double outage_prob = 1.0;
    double covertness_value = 1.0; // achieved E[xi]
};

class feasibility_error : public std::runtime_error {
public:
    feasibility_error(const std::string& what, double best_covertness)
        : std::runtime_error(what), best_covertness_(best_covertness) {}
    double best_covertness() const { return best_covertness_; }

private:
    double best_covertness_;
};

// True iff a nulling configuration with beta_n <= 1 exists:
// sum_n |h_ai_n||h_iw_n| >= |h_aw|.
bool perfect_covertness_achievable(const ChannelSet& channels);

// Construction: cascade terms co-phased opposite to h_aw, amplitudes scaled
// uniformly by |h_aw| / sum |h_ai_n h_iw_n|. Effective Alice->Willie channel
// magnitude <= 1e-12 relative to |h_aw|.
IrsConfig nulling_config(const ChannelSet& channels);

struct CovertGrids {
    std::size_t beta_levels = 11;    // {0, 1/(m-1), ..., 1}
    std::size_t theta_points = 32;   // uniform on [0, 2pi)
    std::vector<double> power_grid_w; // empty = 16 log-spaced defaults
    double power_min_w = 1e-5;
    double power_max_w = 1e-2;
    std::size_t power_points = 16;

    std::size_t willie_draws = 2000; // Monte-Carlo draws behind E[xi]
    std::size_t outage_draws = 1000; // residual-fading draws behind outage
    double residual_rho = 0.95;      // correlation of residual fading

    enum class Search { automatic, full, coordinate };
    Search search = Search::automatic;
    int coordinate_sweeps = 3;

    std::vector<double> beta_values() const;
    std::vector<double> theta_values() const;
    std::vector<double> power_values() const;
};

// Joint (P, beta, theta) search minimizing Bob's fixed-rate outage subject
// to the expected-covertness constraint E[xi] >= 1 - epsilon, the
// expectation taken over Monte-Carlo draws of the Willie-side links
// (h_aw, h_iw), which are known only in distribution. Ties broken by
// smaller P, then lexicographically smaller beta, then theta.
// Throws feasibility_error when no grid candidate satisfies the constraint.
//
// Reproducibility contract for the Monte-Carlo draws (shared by all
// candidates, so results are deterministic in (inputs, seed)):
//  - Willie draws use the stream make_rng(seed, 0x77). Per draw: h_aw, then
//    h_iw for each element in order. Each link draws a uniform [0, 2pi) LoS
//    phase (the LoS direction is unknown without CSI) followed by the
//    Rician scatter sample.
//  - Residual Bob-side fading uses make_rng(seed, 0xb0b). Per draw: h_ab,
//    then (h_ai, h_ib) per element, each perturbed on its scattered part
//    with correlation grids.residual_rho.
CovertDesign covert_outage_optimize(const Scenario& scenario,
                                    const ChannelSet& csi,
                                    const CovertnessParams& covert,
                                    double target_rate_bits,
                                    const CovertGrids& grids,
                                    std::uint64_t seed);

// Columns: position_index, n_elements, probability.
ResultTable perfect_covertness_curve(const Scenario& scenario_template,
                                     const std::vector<Position>& irs_positions,
                                     const std::vector<std::size_t>& n_values,
                                     std::size_t trials, std::uint64_t root_seed,
                                     int threads = 1);

// Detection error achieved by the best single threshold against the
// phase-induced mixture of Willie's received powers; one uniform theta draw
// per trial, beta = 1. Columns: n_elements, avg_detection_error.
ResultTable random_phase_uncertainty_curve(const Scenario& scenario_template,
                                           const std::vector<std::size_t>& n_values,
                                           const CovertnessParams& covert,
                                           std::size_t trials,
                                           std::uint64_t root_seed);

// Per-trial detail of one sweep point of the curve above (for statistics).
struct MixtureDetectionResult {
    double threshold;            // normalized by the noise power
    double false_alarm;          // common to all trials
    std::vector<double> errors;  // per-trial false_alarm + missed detection
    double average() const;
};

MixtureDetectionResult mixture_detection_error(const std::vector<double>& snrs,
                                               std::int64_t blocklength);

} // namespace seclab
