#pragma once

#include "seclab/config.hpp"
#include "seclab/result_table.hpp"

namespace seclab {

inline constexpr const char* artifact_version = "0.1.0";

// Built-in scenario presets, one per reproduced study.
// fig2: secrecy-curve, fig3: covert-prob, fig4: covert-amplitudes,
// fig5: est-rho.
ExperimentConfig preset(const std::string& name);
std::string preset_text(const std::string& name);

// Deterministic for a fixed config (including the seed). Progress is
// reported on stderr per sweep point.
ResultTable run_experiment(const ExperimentConfig& config, int threads = 1,
                           bool quiet = false);

} // namespace seclab
