#include "seclab/detector.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seclab {

namespace {

void check_args(double snr, std::int64_t blocklength) {
    if (snr < 0.0 || !std::isfinite(snr))
        throw std::invalid_argument("detector: snr must be >= 0 and finite");
    if (blocklength < 1)
        throw std::invalid_argument("detector: blocklength must be >= 1");
}

} // namespace

double detection_error_at_threshold(double snr_willie, std::int64_t blocklength,
                                    double u) {
    check_args(snr_willie, blocklength);
    const auto L = static_cast<double>(blocklength);
    if (u <= 0.0)
        return 1.0; // always alarm: P_FA = 1, P_MD = 0
    const double p_fa = boost::math::gamma_q(L, u);
    const double p_md = boost::math::gamma_p(L, u / (1.0 + snr_willie));
    return p_fa + p_md;
}

double detection_error_energy(double snr_willie, std::int64_t blocklength) {
    check_args(snr_willie, blocklength);
    if (snr_willie == 0.0)
        return 1.0; // identical distributions under both hypotheses
    const auto L = static_cast<double>(blocklength);
    // The error sum is minimized where the H0 and H1 gamma densities cross:
    // u* = L (1+snr) ln(1+snr) / snr.
    const double u_star =
        L * (1.0 + snr_willie) * std::log1p(snr_willie) / snr_willie;
    const double xi = detection_error_at_threshold(snr_willie, blocklength, u_star);
    return std::clamp(xi, 0.0, 1.0);
}

DetectorTable::DetectorTable(std::int64_t blocklength, std::size_t points,
                             double snr_min, double snr_max)
    : blocklength_(blocklength) {
    if (points < 2 || !(snr_min > 0.0) || !(snr_max > snr_min))
        throw std::invalid_argument("DetectorTable: bad grid");
    log_min_ = std::log(snr_min);
    log_max_ = std::log(snr_max);
    inv_step_ = static_cast<double>(points - 1) / (log_max_ - log_min_);
    xi_.resize(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double s = std::exp(log_min_ + static_cast<double>(i) / inv_step_);
        xi_[i] = detection_error_energy(s, blocklength);
    }
}

double DetectorTable::operator()(double snr) const {
    if (snr < 0.0 || !std::isfinite(snr))
        throw std::invalid_argument("DetectorTable: snr must be >= 0 and finite");
    if (snr == 0.0)
        return 1.0;
    const double ls = std::log(snr);
    if (!(ls > log_min_))
        return xi_.front();
    if (ls >= log_max_)
        return xi_.back();
    const double pos = (ls - log_min_) * inv_step_;
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    return xi_[i] * (1.0 - frac) + xi_[i + 1] * frac;
}

} // namespace seclab
