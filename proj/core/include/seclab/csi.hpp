#pragma once

#include <cstdint>
#include <vector>

#include "seclab/irs.hpp"
#include "seclab/result_table.hpp"

namespace seclab {

struct CsiQuality {
    double rho = 1.0; // 0 = no CSI, 1 = perfect CSI

    void validate() const;
};

struct ThroughputPoint {
    double rho;
    double r_s;
    double p_to;
    double p_so;
    double est; // r_s (1 - p_to)(1 - p_so)
};

// Gauss-Markov estimation error on the scattered components of the
// IRS-related links; LoS parts and direct links pass through unchanged.
// rho = 1 returns the input bit-identically.
ChannelSet apply_csi_error(const ChannelSet& channels, CsiQuality quality,
                           Rng& rng);

double effective_secrecy_throughput(double r_s, double p_to, double p_so);

// Eve's post-processing SNR under estimation-limited coherent combining:
// rho^2 gamma / (1 + (1 - rho^2) gamma).
double eve_effective_snr(double gamma_true, double rho);

struct EstOptions {
    double r_b_bits = 4.0; // codeword rate
    double r_s_bits = 1.0; // secrecy rate
    bool eve_csi_public = false; // Alice designs on Eve's estimate too
};

struct EstPointStats {
    std::size_t trials = 0;
    std::size_t to_count = 0;        // C_b(true) < R_b
    std::size_t so_count = 0;        // Eve effective capacity > R_b - R_s
    std::size_t to_and_so_count = 0; // both events in the same trial
    double sum_cb_true = 0.0;

    double p_to() const;
    double p_so() const;
    double est(double r_s) const;
    double est_stderr(double r_s) const; // delta method
};

EstPointStats est_point(const Scenario& scenario, double rho,
                        const EstOptions& options, std::size_t trials,
                        std::uint64_t root_seed, std::size_t rho_index,
                        int threads = 1);

// Columns: rho, r_s, p_to, p_so, est.
ResultTable est_vs_rho_curve(const Scenario& scenario_template,
                             const std::vector<double>& rho_values,
                             const EstOptions& options, std::size_t trials,
                             std::uint64_t root_seed, int threads = 1);

} // namespace seclab
