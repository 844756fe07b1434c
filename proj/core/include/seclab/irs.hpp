#pragma once

#include <optional>
#include <span>
#include <vector>

#include "seclab/channel.hpp"

namespace seclab {

// Per-element reflection state of the surface.
struct IrsConfig {
    std::vector<double> beta;  // amplitudes, in [0,1]
    std::vector<double> theta; // phase shifts, in [0, 2*pi)
    std::optional<int> phase_bits;

    static IrsConfig uniform(std::size_t n, double beta_value = 1.0,
                             double theta_value = 0.0);
    std::size_t size() const { return beta.size(); }
    void validate() const; // throws std::invalid_argument
};

// direct + sum_n beta_n e^{j theta_n} incident_n outgoing_n
cplx effective_channel(cplx direct, std::span<const cplx> incident,
                       std::span<const cplx> outgoing, const IrsConfig& config);

// Largest reflected-path magnitude achievable with beta_n <= 1:
// sum_n |incident_n| |outgoing_n|.
double max_cascade_magnitude(std::span<const cplx> incident,
                             std::span<const cplx> outgoing);

// Snap each phase to the nearest point of the 2^bits uniform grid anchored
// at 0; ties toward the smaller angle. Amplitudes unchanged.
IrsConfig quantize_phases(const IrsConfig& config, int bits);

// Nearest grid angle for a single phase (same snapping rule).
double quantize_angle(double theta, int bits);

} // namespace seclab
