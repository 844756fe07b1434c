#include "seclab/csi.hpp"

#include <cmath>
#include <stdexcept>

#include "seclab/parallel.hpp"
#include "seclab/secrecy.hpp"

namespace seclab {

void CsiQuality::validate() const {
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("CsiQuality: rho must be in [0,1]");
}

ChannelSet apply_csi_error(const ChannelSet& channels, CsiQuality quality,
                           Rng& rng) {
    quality.validate();
    if (quality.rho == 1.0)
        return channels;

    ChannelSet est = channels;
    const double rho = quality.rho;
    const double mix = std::sqrt(1.0 - rho * rho);
    std::normal_distribution<double> nd(0.0, 1.0 / std::sqrt(2.0));

    auto perturb = [&](std::vector<cplx>& total, std::vector<cplx>& scatter,
                       double var) {
        const double sigma = std::sqrt(var);
        for (std::size_t i = 0; i < total.size(); ++i) {
            const cplx fresh = sigma * cplx(nd(rng), nd(rng));
            const cplx est_scatter = rho * scatter[i] + mix * fresh;
            total[i] += est_scatter - scatter[i];
            scatter[i] = est_scatter;
        }
    };

    // fixed order: h_ai, h_ib, h_ie, h_iw
    perturb(est.h_ai, est.s_ai, est.var_ai);
    perturb(est.h_ib, est.s_ib, est.var_ib);
    perturb(est.h_ie, est.s_ie, est.var_ie);
    perturb(est.h_iw, est.s_iw, est.var_iw);
    return est;
}

double effective_secrecy_throughput(double r_s, double p_to, double p_so) {
    if (r_s < 0.0)
        throw std::invalid_argument("effective_secrecy_throughput: r_s < 0");
    if (!(p_to >= 0.0 && p_to <= 1.0) || !(p_so >= 0.0 && p_so <= 1.0))
        throw std::invalid_argument(
            "effective_secrecy_throughput: probability out of [0,1]");
    return r_s * (1.0 - p_to) * (1.0 - p_so);
}

double eve_effective_snr(double gamma_true, double rho) {
    if (gamma_true < 0.0)
        throw std::invalid_argument("eve_effective_snr: negative snr");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("eve_effective_snr: rho out of [0,1]");
    const double rho2 = rho * rho;
    return rho2 * gamma_true / (1.0 + (1.0 - rho2) * gamma_true);
}

double EstPointStats::p_to() const {
    return trials ? static_cast<double>(to_count) / static_cast<double>(trials)
                  : 0.0;
}

double EstPointStats::p_so() const {
    return trials ? static_cast<double>(so_count) / static_cast<double>(trials)
                  : 0.0;
}

double EstPointStats::est(double r_s) const {
    return effective_secrecy_throughput(r_s, p_to(), p_so());
}

double EstPointStats::est_stderr(double r_s) const {
    if (trials < 2)
        return 0.0;
    const auto tn = static_cast<double>(trials);
    const double a = p_to(), b = p_so();
    const double eab = static_cast<double>(to_and_so_count) / tn;
    const double var_a = a * (1.0 - a) / tn;
    const double var_b = b * (1.0 - b) / tn;
    const double cov_ab = (eab - a * b) / tn;
    const double ga = -r_s * (1.0 - b);
    const double gb = -r_s * (1.0 - a);
    const double var =
        ga * ga * var_a + gb * gb * var_b + 2.0 * ga * gb * cov_ab;
    return var > 0.0 ? std::sqrt(var) : 0.0;
}

EstPointStats est_point(const Scenario& scenario, double rho,
                        const EstOptions& options, std::size_t trials,
                        std::uint64_t root_seed, std::size_t rho_index,
                        int threads) {
    scenario.validate();
    if (!scenario.eve)
        throw std::invalid_argument("est_point: Eve position required");
    if (!(options.r_s_bits > 0.0 && options.r_s_bits < options.r_b_bits))
        throw std::invalid_argument("est_point: need 0 < R_s < R_b");
    CsiQuality quality{rho};
    quality.validate();

    struct TrialOut {
        unsigned char to, so;
        double cb;
    };
    std::vector<TrialOut> out(trials);

    parallel_for(trials, threads, [&](std::size_t t) {
        Rng rng = make_rng(root_seed, rho_index, t);
        const ChannelSet truth = sample_channel_set(scenario, rng);
        const ChannelSet est = apply_csi_error(truth, quality, rng);

        // Alice designs on her estimated legitimate links.
        IrsConfig config;
        if (options.eve_csi_public) {
            PhaseOptimizerOptions opt;
            opt.seed = derive_seed(root_seed, rho_index, t, 1);
            config = optimize_phases_secrecy(est, scenario, opt).config;
        } else {
            config = align_phases_for_bob(est);
        }

        const cplx hb_true = effective_channel(truth.h_ab, truth.h_ai,
                                               truth.h_ib, config);
        const cplx he_true = effective_channel(truth.h_ae, truth.h_ai,
                                               truth.h_ie, config);
        const double gb =
            snr(hb_true, scenario.tx_power_w, scenario.noise_power_w);
        const double ge_true =
            snr(he_true, scenario.tx_power_w, scenario.noise_power_w);
        const double ge = eve_effective_snr(ge_true, rho);

        const double cb = std::log2(1.0 + gb);
        const double ce = std::log2(1.0 + ge);
        out[t].cb = cb;
        out[t].to = cb < options.r_b_bits ? 1 : 0;
        out[t].so = ce > options.r_b_bits - options.r_s_bits ? 1 : 0;
    });

    EstPointStats stats;
    stats.trials = trials;
    for (const auto& o : out) {
        stats.to_count += o.to;
        stats.so_count += o.so;
        stats.to_and_so_count += (o.to && o.so) ? 1 : 0;
        stats.sum_cb_true += o.cb;
    }
    return stats;
}

ResultTable est_vs_rho_curve(const Scenario& scenario_template,
                             const std::vector<double>& rho_values,
                             const EstOptions& options, std::size_t trials,
                             std::uint64_t root_seed, int threads) {
    if (trials < 1)
        throw std::invalid_argument("est_vs_rho_curve: trials must be >= 1");
    ResultTable table;
    table.columns = {"rho", "r_s", "p_to", "p_so", "est"};
    table.root_seed = root_seed;
    for (std::size_t i = 0; i < rho_values.size(); ++i) {
        const auto stats = est_point(scenario_template, rho_values[i], options,
                                     trials, root_seed, i, threads);
        table.add_row({rho_values[i], options.r_s_bits, stats.p_to(),
                       stats.p_so(), stats.est(options.r_s_bits)});
    }
    return table;
}

} // namespace seclab
