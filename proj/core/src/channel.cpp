#include "seclab/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seclab {

double distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double RicianParams::k_linear() const {
    return std::pow(10.0, k_factor_db / 10.0);
}

void Scenario::validate() const {
    if (!(noise_power_w > 0.0))
        throw std::invalid_argument("scenario: noise_power_w must be > 0");
    if (tx_power_w < 0.0)
        throw std::invalid_argument("scenario: tx_power_w must be >= 0");
    if (!(los_wavelength_m > 0.0))
        throw std::invalid_argument("scenario: los_wavelength_m must be > 0");
    auto finite = [](const Position& p) {
        return std::isfinite(p.x) && std::isfinite(p.y);
    };
    if (!finite(alice) || !finite(bob) || !finite(irs) ||
        (eve && !finite(*eve)) || (willie && !finite(*willie)))
        throw std::invalid_argument("scenario: positions must be finite");
}

double path_loss(double distance_m, double exponent, double ref_gain_db) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("path_loss: distance must be > 0");
    return std::pow(10.0, ref_gain_db / 10.0) * std::pow(distance_m, -exponent);
}

namespace {

// CN(0,1): real/imag each N(0, 1/2)
cplx circular_gaussian(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0 / std::sqrt(2.0));
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

} // namespace

cplx sample_small_scale(const RicianParams& params, Rng& rng, double los_phase) {
    const double k = params.k_linear();
    const double los_amp = std::sqrt(k / (k + 1.0));
    const double nlos_amp = std::sqrt(1.0 / (k + 1.0));
    const cplx los = los_amp * std::polar(1.0, los_phase);
    return los + nlos_amp * circular_gaussian(rng);
}

cplx sample_scatter(const RicianParams& params, Rng& rng) {
    const double k = params.k_linear();
    return std::sqrt(1.0 / (k + 1.0)) * circular_gaussian(rng);
}

namespace {

struct LinkSample {
    cplx total;
    cplx scatter;
};

// sqrt(gain) * (LoS + scattered); LoS phase is -2*pi*d/lambda
LinkSample sample_link(double d, double gain, const Scenario& sc, Rng& rng) {
    const double k = sc.rician.k_linear();
    const double los_phase =
        -2.0 * std::numbers::pi * d / sc.los_wavelength_m;
    const double amp = std::sqrt(gain);
    const cplx los =
        amp * std::sqrt(k / (k + 1.0)) * std::polar(1.0, los_phase);
    const cplx scat = amp * sample_scatter(sc.rician, rng);
    return {los + scat, scat};
}

} // namespace

ChannelSet sample_channel_set(const Scenario& scenario, Rng& rng) {
    scenario.validate();
    const auto& pl = scenario.path_loss;
    const double k = scenario.rician.k_linear();
    const std::size_t n = scenario.n_elements;

    auto direct_gain = [&](const Position& p) {
        return path_loss(distance(scenario.alice, p), pl.exponent_direct,
                         pl.ref_gain_db);
    };
    auto hop_gain = [&](const Position& a, const Position& b) {
        return path_loss(distance(a, b), pl.exponent_irs, pl.ref_gain_db);
    };

    ChannelSet cs;
    cs.has_eve = scenario.eve.has_value();
    cs.has_willie = scenario.willie.has_value();

    // fixed draw order: direct links, then element-wise IRS links
    {
        const double g = direct_gain(scenario.bob);
        const double d = distance(scenario.alice, scenario.bob);
        auto s = sample_link(d, g, scenario, rng);
        cs.h_ab = s.total;
        cs.s_ab = s.scatter;
        cs.var_ab = g / (k + 1.0);
    }
    if (cs.has_eve) {
        const double g = direct_gain(*scenario.eve);
        const double d = distance(scenario.alice, *scenario.eve);
        auto s = sample_link(d, g, scenario, rng);
        cs.h_ae = s.total;
        cs.s_ae = s.scatter;
        cs.var_ae = g / (k + 1.0);
    }
    if (cs.has_willie) {
        const double g = direct_gain(*scenario.willie);
        const double d = distance(scenario.alice, *scenario.willie);
        auto s = sample_link(d, g, scenario, rng);
        cs.h_aw = s.total;
        cs.s_aw = s.scatter;
        cs.var_aw = g / (k + 1.0);
    }

    const double g_ai = hop_gain(scenario.alice, scenario.irs);
    const double d_ai = distance(scenario.alice, scenario.irs);
    const double g_ib = hop_gain(scenario.irs, scenario.bob);
    const double d_ib = distance(scenario.irs, scenario.bob);
    cs.var_ai = g_ai / (k + 1.0);
    cs.var_ib = g_ib / (k + 1.0);

    double g_ie = 0.0, d_ie = 0.0, g_iw = 0.0, d_iw = 0.0;
    if (cs.has_eve) {
        g_ie = hop_gain(scenario.irs, *scenario.eve);
        d_ie = distance(scenario.irs, *scenario.eve);
        cs.var_ie = g_ie / (k + 1.0);
    }
    if (cs.has_willie) {
        g_iw = hop_gain(scenario.irs, *scenario.willie);
        d_iw = distance(scenario.irs, *scenario.willie);
        cs.var_iw = g_iw / (k + 1.0);
    }

    cs.h_ai.reserve(n);
    cs.h_ib.reserve(n);
    cs.s_ai.reserve(n);
    cs.s_ib.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto a = sample_link(d_ai, g_ai, scenario, rng);
        cs.h_ai.push_back(a.total);
        cs.s_ai.push_back(a.scatter);
        auto b = sample_link(d_ib, g_ib, scenario, rng);
        cs.h_ib.push_back(b.total);
        cs.s_ib.push_back(b.scatter);
        if (cs.has_eve) {
            auto e = sample_link(d_ie, g_ie, scenario, rng);
            cs.h_ie.push_back(e.total);
            cs.s_ie.push_back(e.scatter);
        }
        if (cs.has_willie) {
            auto w = sample_link(d_iw, g_iw, scenario, rng);
            cs.h_iw.push_back(w.total);
            cs.s_iw.push_back(w.scatter);
        }
    }
    return cs;
}

} // namespace seclab
