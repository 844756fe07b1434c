// irs-seclab: IRS-aided physical-layer security and covert communication
// experiments. One subcommand per built-in study plus a config-driven runner.
//
// Exit codes: 0 success, 2 configuration error, 3 infeasible optimization,
// 4 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "seclab/experiment.hpp"

namespace {

int run_config(const seclab::ExperimentConfig& cfg, const std::string& out,
               int threads, bool validate_only) {
    if (validate_only) {
        std::printf("config ok: kind=%s digest=%s\n",
                    seclab::to_string(cfg.kind).c_str(), cfg.digest().c_str());
        return 0;
    }
    try {
        const seclab::ResultTable table =
            seclab::run_experiment(cfg, threads);
        if (out.empty()) {
            std::fputs(seclab::to_csv(table).c_str(), stdout);
        } else {
            seclab::emit_csv(table, out);
            std::fprintf(stderr, "wrote %s (%zu rows, digest %s)\n",
                         out.c_str(), table.rows.size(),
                         table.config_digest.c_str());
        }
        return 0;
    } catch (const seclab::feasibility_error& e) {
        std::fprintf(stderr, "infeasible: %s (best covertness %.6f)\n",
                     e.what(), e.best_covertness());
        return 3;
    } catch (const seclab::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"IRS-aided security and covertness simulation toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    int threads = 0; // 0 = all cores
    bool validate_only = false;
    std::int64_t seed_override = -1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write CSV here (default stdout)");
        cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
        cmd->add_option("--seed", seed_override, "override montecarlo.root_seed");
        cmd->add_flag("--validate", validate_only,
                      "parse and validate only, do not run");
    };

    CLI::App* run = app.add_subcommand("run", "run an experiment config file");
    run->add_option("config", config_path, "config file path")->required();
    add_common(run);

    for (const char* name : {"fig2", "fig3", "fig4", "fig5"})
        add_common(app.add_subcommand(
            name, std::string("built-in preset '") + name + "'"));

    CLI11_PARSE(app, argc, argv);

    seclab::ExperimentConfig cfg;
    try {
        if (run->parsed()) {
            cfg = seclab::load_config(config_path);
        } else {
            cfg = seclab::preset(app.get_subcommands().front()->get_name());
        }
    } catch (const seclab::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }
    if (seed_override >= 0)
        cfg.root_seed = static_cast<std::uint64_t>(seed_override);

    return run_config(cfg, out_path, threads, validate_only);
}
