#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seclab/channel.hpp"
#include "seclab/covert.hpp"
#include "seclab/csi.hpp"
#include "seclab/secrecy.hpp"

namespace seclab {

enum class ExperimentKind {
    secrecy_curve,     // fig2: average secrecy rate vs N
    covert_prob,       // fig3: perfect-covertness probability vs N
    covert_amplitudes, // fig4: jointly optimized design vs epsilon
    est_rho,           // fig5: effective secrecy throughput vs rho
};

std::string to_string(ExperimentKind kind);

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::secrecy_curve;
    Scenario scenario;
    std::vector<Position> irs_candidates; // covert-prob only

    std::string sweep_variable; // n_elements | epsilon | rho
    std::vector<double> sweep_values;

    std::size_t trials = 1;
    std::uint64_t root_seed = 1;

    CovertnessParams covert;
    double target_rate_bits = 6.0;
    CovertGrids grids;

    EstOptions est;
    PhaseOptimizerOptions optimizer;

    // effective config in canonical key order; basis of the digest
    std::string canonical_text() const;
    std::string digest() const;
};

// Parse + validate the key-value config format. Unknown keys are rejected;
// parse errors carry line/column, validation errors name the field.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

} // namespace seclab
