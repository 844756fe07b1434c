#include "seclab/irs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seclab {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

IrsConfig IrsConfig::uniform(std::size_t n, double beta_value,
                             double theta_value) {
    IrsConfig c;
    c.beta.assign(n, beta_value);
    c.theta.assign(n, theta_value);
    return c;
}

void IrsConfig::validate() const {
    if (beta.size() != theta.size())
        throw std::invalid_argument("IrsConfig: beta/theta length mismatch");
    for (double b : beta)
        if (!(b >= 0.0 && b <= 1.0))
            throw std::invalid_argument("IrsConfig: beta out of [0,1]");
    for (double t : theta)
        if (!(t >= 0.0 && t < two_pi))
            throw std::invalid_argument("IrsConfig: theta out of [0,2pi)");
    if (phase_bits && *phase_bits < 1)
        throw std::invalid_argument("IrsConfig: phase_bits must be >= 1");
}

cplx effective_channel(cplx direct, std::span<const cplx> incident,
                       std::span<const cplx> outgoing,
                       const IrsConfig& config) {
    const std::size_t n = config.size();
    if (incident.size() != n || outgoing.size() != n ||
        config.theta.size() != n)
        throw std::invalid_argument("effective_channel: length mismatch");
    cplx sum = direct;
    for (std::size_t i = 0; i < n; ++i)
        sum += config.beta[i] * std::polar(1.0, config.theta[i]) *
               incident[i] * outgoing[i];
    return sum;
}

double max_cascade_magnitude(std::span<const cplx> incident,
                             std::span<const cplx> outgoing) {
    if (incident.size() != outgoing.size())
        throw std::invalid_argument("max_cascade_magnitude: length mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < incident.size(); ++i)
        sum += std::abs(incident[i]) * std::abs(outgoing[i]);
    return sum;
}

double quantize_angle(double theta, int bits) {
    if (bits < 1)
        throw std::invalid_argument("quantize_angle: bits must be >= 1");
    const double levels = std::ldexp(1.0, bits); // 2^bits
    const double step = two_pi / levels;
    const double q = theta / step;
    double k = std::floor(q + 0.5);
    // exact halfway: snap down
    if (q + 0.5 == k && q != std::floor(q))
        k -= 1.0;
    k = std::fmod(k, levels);
    if (k < 0.0)
        k += levels;
    return k * step;
}

IrsConfig quantize_phases(const IrsConfig& config, int bits) {
    if (bits < 1)
        throw std::invalid_argument("quantize_phases: bits must be >= 1");
    IrsConfig out = config;
    for (double& t : out.theta)
        t = quantize_angle(t, bits);
    out.phase_bits = bits;
    return out;
}

} // namespace seclab
