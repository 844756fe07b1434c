#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "seclab/rng.hpp"

namespace seclab {

using cplx = std::complex<double>;

struct Position {
    double x = 0.0; // meters
    double y = 0.0; // meters
};

double distance(const Position& a, const Position& b);

struct PathLossParams {
    double exponent_direct = 3.5; // direct links
    double exponent_irs = 2.2;    // per IRS hop
    double ref_gain_db = -30.0;   // gain at 1 m
};

struct RicianParams {
    double k_factor_db = 0.0;

    double k_linear() const;
};

// One joint realization of all channel coefficients of a scenario.
// The *_scatter members hold the scattered (NLoS) part of each coefficient,
// at the same scale as the total, so that estimation-error models can
// perturb the scattered component while keeping the LoS part fixed.
struct ChannelSet {
    cplx h_ab{}, h_ae{}, h_aw{};
    std::vector<cplx> h_ai, h_ib, h_ie, h_iw;

    cplx s_ab{}, s_ae{}, s_aw{};
    std::vector<cplx> s_ai, s_ib, s_ie, s_iw;

    // complex variance of the scattered part, per link family
    double var_ab = 0.0, var_ae = 0.0, var_aw = 0.0;
    double var_ai = 0.0, var_ib = 0.0, var_ie = 0.0, var_iw = 0.0;

    bool has_eve = false;
    bool has_willie = false;

    std::size_t n_elements() const { return h_ai.size(); }
};

struct Scenario {
    Position alice{};
    Position bob{};
    std::optional<Position> eve;
    std::optional<Position> willie;
    Position irs{};
    std::size_t n_elements = 0;
    RicianParams rician{};
    PathLossParams path_loss{};
    double tx_power_w = 1.0;
    double noise_power_w = 1e-12;
    double los_wavelength_m = 0.1; // sets the deterministic LoS phase per link

    void validate() const; // throws std::invalid_argument
};

// Log-distance path loss, linear power gain: 10^(ref_gain_db/10) * d^-exponent.
// The cascaded IRS link gain is the product of its two hop gains.
double path_loss(double distance_m, double exponent, double ref_gain_db);

// Rician small-scale coefficient, E[|g|^2] = 1.
// g = sqrt(K/(K+1)) e^{j los_phase} + sqrt(1/(K+1)) w,  w ~ CN(0,1).
cplx sample_small_scale(const RicianParams& params, Rng& rng,
                        double los_phase = 0.0);

// Scattered part only: sqrt(1/(K+1)) w.
cplx sample_scatter(const RicianParams& params, Rng& rng);

// Full joint draw; deterministic given (scenario, rng state).
ChannelSet sample_channel_set(const Scenario& scenario, Rng& rng);

} // namespace seclab
