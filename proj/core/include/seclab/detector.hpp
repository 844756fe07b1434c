#pragma once

#include <cstdint>
#include <vector>

namespace seclab {

// Minimal total error probability (false alarm + missed detection, equal
// priors, best single threshold) of a radiometer observing L i.i.d. complex
// Gaussian samples: H0 variance sigma^2, H1 variance sigma^2 (1 + snr).
// Returns a value in [0, 1]; exactly 1 at snr = 0.
double detection_error_energy(double snr_willie, std::int64_t blocklength);

// Total error at a given normalized threshold u = tau / sigma^2 (the test
// statistic is the sum of L sample energies).
double detection_error_at_threshold(double snr_willie, std::int64_t blocklength,
                                    double u);

// Tabulated xi(snr) at fixed blocklength, log-spaced in snr with linear
// interpolation. Used inside grid searches where millions of evaluations
// are needed; accurate to ~1e-5 against detection_error_energy.
class DetectorTable {
public:
    explicit DetectorTable(std::int64_t blocklength, std::size_t points = 4096,
                           double snr_min = 1e-8, double snr_max = 1e6);

    double operator()(double snr) const;
    std::int64_t blocklength() const { return blocklength_; }

private:
    std::int64_t blocklength_;
    double log_min_, log_max_, inv_step_;
    std::vector<double> xi_;
};

} // namespace seclab
