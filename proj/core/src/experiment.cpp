#include "seclab/experiment.hpp"

#include <cstdio>
#include <stdexcept>

#include "seclab/parallel.hpp"
#include "seclab/rng.hpp"

namespace seclab {

namespace {

const char* preset_fig2 = R"(# average secrecy rate vs number of elements
kind = secrecy-curve
scenario.alice = [0, 5]
scenario.bob = [35, 10]
scenario.eve = [75, 10]
scenario.irs = [55, 0]
scenario.k_factor_db = 2
scenario.tx_power_w = 1.0
scenario.noise_power_w = 1e-12
sweep.variable = n_elements
sweep.values = [8, 16, 32, 64]
montecarlo.trials = 5000
montecarlo.root_seed = 20201
optimizer.restarts = 2
optimizer.grid_points = 128
)";

const char* preset_fig3 = R"(# perfect-covertness probability vs number of elements
kind = covert-prob
scenario.alice = [0, 5]
scenario.bob = [80, 0]
scenario.willie = [100, 0]
scenario.irs_candidates = [0, 10, 80, 10, 100, 10]
scenario.k_factor_db = 5
sweep.variable = n_elements
sweep.values = [4, 8, 16, 32, 64]
montecarlo.trials = 5000
montecarlo.root_seed = 20301
)";

const char* preset_fig4 = R"(# jointly optimized amplitudes/phases/power vs covertness level
kind = covert-amplitudes
scenario.alice = [0, 5]
scenario.bob = [35, 10]
scenario.willie = [75, 10]
scenario.irs = [55, 0]
scenario.n_elements = 4
scenario.k_factor_db = 3
scenario.noise_power_w = 1e-12
# heavily obstructed direct paths keep the reflected path competitive
scenario.path_loss.exponent_direct = 5
sweep.variable = epsilon
sweep.values = [0.05, 0.1, 0.2, 0.4]
montecarlo.trials = 200
montecarlo.root_seed = 20401
covert.blocklength = 100
covert.target_rate_bits = 0.55
grids.power_min_w = 1e-3
grids.power_max_w = 1
grids.power_points = 45
grids.theta_points = 16
grids.willie_draws = 500
grids.outage_draws = 1000
grids.coordinate_sweeps = 2
)";

const char* preset_fig5 = R"(# effective secrecy throughput vs CSI quality
kind = est-rho
scenario.alice = [0, 0]
scenario.bob = [40, 0]
scenario.eve = [60, 0]
scenario.irs = [40, 10]
scenario.n_elements = 32
scenario.k_factor_db = 5
scenario.tx_power_w = 1.0
scenario.noise_power_w = 1e-12
sweep.variable = rho
sweep.values = [0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1]
montecarlo.trials = 10000
montecarlo.root_seed = 20501
rates.r_b_bits = 12.4
rates.r_s_bits = 3.5
)";

void progress(bool quiet, std::size_t i, std::size_t n, const char* what,
              double value) {
    if (quiet)
        return;
    std::fprintf(stderr, "[%zu/%zu] %s = %g\n", i + 1, n, what, value);
}

ResultTable run_secrecy_curve(const ExperimentConfig& cfg, int threads,
                              bool quiet) {
    ResultTable table;
    table.columns = {"n_elements", "avg_secrecy_rate", "avg_main_rate"};
    const std::size_t points = cfg.sweep_values.size();
    for (std::size_t i = 0; i < points; ++i) {
        progress(quiet, i, points, "n_elements", cfg.sweep_values[i]);
        const auto n = static_cast<std::size_t>(cfg.sweep_values[i]);
        std::vector<SecrecyTrial> results(cfg.trials);
        parallel_for(cfg.trials, threads, [&](std::size_t t) {
            results[t] = secrecy_trial(cfg.scenario, n,
                                       derive_seed(cfg.root_seed, i, t),
                                       cfg.optimizer);
        });
        double sum_s = 0.0, sum_m = 0.0;
        for (const auto& r : results) {
            sum_s += r.secrecy_rate;
            sum_m += r.main_rate;
        }
        const auto tn = static_cast<double>(cfg.trials);
        table.add_row({static_cast<double>(n), sum_s / tn, sum_m / tn});
    }
    return table;
}

ResultTable run_covert_prob(const ExperimentConfig& cfg, int threads,
                            bool quiet) {
    if (!quiet)
        std::fprintf(stderr, "covert-prob: %zu positions x %zu sweep points\n",
                     cfg.irs_candidates.size(), cfg.sweep_values.size());
    std::vector<std::size_t> n_values;
    for (double v : cfg.sweep_values)
        n_values.push_back(static_cast<std::size_t>(v));
    return perfect_covertness_curve(cfg.scenario, cfg.irs_candidates, n_values,
                                    cfg.trials, cfg.root_seed, threads);
}

ResultTable run_covert_amplitudes(const ExperimentConfig& cfg, int threads,
                                  bool quiet) {
    const std::size_t n = cfg.scenario.n_elements;
    if (n == 0)
        throw config_error("covert-amplitudes: scenario.n_elements must be >= 1");
    ResultTable table;
    table.columns = {"epsilon", "power_w", "outage"};
    for (std::size_t i = 0; i < n; ++i)
        table.columns.push_back("beta_" + std::to_string(i + 1));

    const std::size_t points = cfg.sweep_values.size();
    for (std::size_t i = 0; i < points; ++i) {
        progress(quiet, i, points, "epsilon", cfg.sweep_values[i]);
        CovertnessParams covert = cfg.covert;
        covert.epsilon = cfg.sweep_values[i];
        std::vector<CovertDesign> designs(cfg.trials);
        try {
            parallel_for(cfg.trials, threads, [&](std::size_t r) {
                // realization seeds are shared across epsilon values so the
                // sweep is paired
                Rng rng = make_rng(cfg.root_seed, 0, r);
                Scenario sc = cfg.scenario;
                const ChannelSet csi = sample_channel_set(sc, rng);
                designs[r] = covert_outage_optimize(
                    sc, csi, covert, cfg.target_rate_bits, cfg.grids,
                    derive_seed(cfg.root_seed, 0, r, 1));
            });
        } catch (const feasibility_error& e) {
            throw feasibility_error(std::string(e.what()) +
                                        " (at sweep point epsilon=" +
                                        std::to_string(covert.epsilon) + ")",
                                    e.best_covertness());
        }
        for (const auto& d : designs) {
            std::vector<double> row = {covert.epsilon, d.power_w,
                                       d.outage_prob};
            row.insert(row.end(), d.config.beta.begin(), d.config.beta.end());
            table.add_row(std::move(row));
        }
    }
    return table;
}

ResultTable run_est_rho(const ExperimentConfig& cfg, int threads, bool quiet) {
    ResultTable table;
    table.columns = {"rho", "r_s", "p_to", "p_so", "est"};
    const std::size_t points = cfg.sweep_values.size();
    for (std::size_t i = 0; i < points; ++i) {
        progress(quiet, i, points, "rho", cfg.sweep_values[i]);
        const auto stats = est_point(cfg.scenario, cfg.sweep_values[i], cfg.est,
                                     cfg.trials, cfg.root_seed, i, threads);
        table.add_row({cfg.sweep_values[i], cfg.est.r_s_bits, stats.p_to(),
                       stats.p_so(), stats.est(cfg.est.r_s_bits)});
    }
    return table;
}

} // namespace

std::string preset_text(const std::string& name) {
    if (name == "fig2")
        return preset_fig2;
    if (name == "fig3")
        return preset_fig3;
    if (name == "fig4")
        return preset_fig4;
    if (name == "fig5")
        return preset_fig5;
    throw config_error("unknown preset '" + name + "'");
}

ExperimentConfig preset(const std::string& name) {
    return parse_config(preset_text(name));
}

ResultTable run_experiment(const ExperimentConfig& config, int threads,
                           bool quiet) {
    ResultTable table;
    try {
        switch (config.kind) {
        case ExperimentKind::secrecy_curve:
            table = run_secrecy_curve(config, threads, quiet);
            break;
        case ExperimentKind::covert_prob:
            table = run_covert_prob(config, threads, quiet);
            break;
        case ExperimentKind::covert_amplitudes:
            table = run_covert_amplitudes(config, threads, quiet);
            break;
        case ExperimentKind::est_rho:
            table = run_est_rho(config, threads, quiet);
            break;
        }
    } catch (const feasibility_error&) {
        throw;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("experiment '") +
                                 to_string(config.kind) + "' failed: " +
                                 e.what());
    }
    table.config_digest = config.digest();
    table.root_seed = config.root_seed;
    table.version = artifact_version;
    return table;
}

} // namespace seclab
