#include "seclab/secrecy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "seclab/parallel.hpp"
#include "seclab/rng.hpp"

namespace seclab {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

double snr(cplx channel, double power_w, double noise_w) {
    if (!(noise_w > 0.0))
        throw std::invalid_argument("snr: noise must be > 0");
    if (power_w < 0.0)
        throw std::invalid_argument("snr: power must be >= 0");
    return power_w * std::norm(channel) / noise_w;
}

double secrecy_rate(double gamma_b, double gamma_e) {
    if (gamma_b < 0.0 || gamma_e < 0.0)
        throw std::invalid_argument("secrecy_rate: SNRs must be >= 0");
    const double diff = std::log2(1.0 + gamma_b) - std::log2(1.0 + gamma_e);
    return diff > 0.0 ? diff : 0.0;
}

IrsConfig align_phases_for_bob(const ChannelSet& channels,
                               const std::vector<double>& beta) {
    const std::size_t n = channels.n_elements();
    IrsConfig config;
    config.beta = beta.empty() ? std::vector<double>(n, 1.0) : beta;
    if (config.beta.size() != n)
        throw std::invalid_argument("align_phases_for_bob: beta length");
    config.theta.resize(n);
    const double ref = std::arg(channels.h_ab);
    for (std::size_t i = 0; i < n; ++i) {
        double t = ref - std::arg(channels.h_ai[i] * channels.h_ib[i]);
        t = std::fmod(t, two_pi);
        if (t < 0.0)
            t += two_pi;
        config.theta[i] = t;
    }
    return config;
}

SecrecyOutcome evaluate_config(const ChannelSet& channels,
                               const Scenario& scenario,
                               const IrsConfig& config) {
    const cplx hb = effective_channel(channels.h_ab, channels.h_ai,
                                      channels.h_ib, config);
    const double gb = snr(hb, scenario.tx_power_w, scenario.noise_power_w);
    double ge = 0.0;
    if (channels.has_eve) {
        const cplx he = effective_channel(channels.h_ae, channels.h_ai,
                                          channels.h_ie, config);
        ge = snr(he, scenario.tx_power_w, scenario.noise_power_w);
    }
    SecrecyOutcome out;
    out.rate_main = std::log2(1.0 + gb);
    out.rate_eve = std::log2(1.0 + ge);
    out.secrecy_rate = secrecy_rate(gb, ge);
    return out;
}

namespace {

// Secrecy-rate ascent state over precomputed cascade terms. Works on the
// ratio (1 + s|S_b|^2) / (1 + s|S_e|^2); comparisons cross-multiply so the
// inner line search needs no logarithms.
struct AscentProblem {
    std::vector<cplx> cb, ce; // beta_n * h_ai_n * h_i{b,e}_n
    cplx db, de;              // direct links (de = 0 when Eve absent)
    double s;                 // P / sigma^2

    std::size_t size() const { return cb.size(); }

    // objective numerator/denominator for phase vector theta
    std::pair<double, double> ratio(const std::vector<double>& theta) const {
        cplx sb = db, se = de;
        for (std::size_t i = 0; i < theta.size(); ++i) {
            const cplx w = std::polar(1.0, theta[i]);
            sb += w * cb[i];
            se += w * ce[i];
        }
        return {1.0 + s * std::norm(sb), 1.0 + s * std::norm(se)};
    }
};

double rate_from_ratio(std::pair<double, double> r) {
    return std::log2(r.first) - std::log2(r.second);
}

// One coordinate-ascent pass from a given start; returns final theta and
// the achieved (num, den) ratio.
struct AscentRun {
    std::vector<double> theta;
    std::pair<double, double> value;
};

AscentRun ascend(const AscentProblem& p, std::vector<double> theta,
                 const PhaseOptimizerOptions& opt) {
    const std::size_t n = p.size();
    // candidate phase grid
    std::vector<double> grid;
    std::vector<cplx> grid_w;
    int points = opt.grid_points;
    if (opt.phase_bits)
        points = 1 << *opt.phase_bits;
    if (points < 1)
        throw std::invalid_argument("optimizer: grid_points must be >= 1");
    grid.reserve(points);
    grid_w.reserve(points);
    for (int g = 0; g < points; ++g) {
        const double t = two_pi * g / points;
        grid.push_back(t);
        grid_w.push_back(std::polar(1.0, t));
    }

    if (opt.phase_bits)
        for (double& t : theta)
            t = quantize_angle(t, *opt.phase_bits);

    cplx sb = p.db, se = p.de;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx w = std::polar(1.0, theta[i]);
        sb += w * p.cb[i];
        se += w * p.ce[i];
    }

    auto objective = [&](cplx b, cplx e) {
        return std::pair<double, double>{1.0 + p.s * std::norm(b),
                                         1.0 + p.s * std::norm(e)};
    };
    auto better = [](std::pair<double, double> a, std::pair<double, double> b) {
        return a.first * b.second > b.first * a.second;
    };

    double last_rate = rate_from_ratio(objective(sb, se));
    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
        for (std::size_t i = 0; i < n; ++i) {
            const cplx w_old = std::polar(1.0, theta[i]);
            const cplx base_b = sb - w_old * p.cb[i];
            const cplx base_e = se - w_old * p.ce[i];

            double best_t = theta[i];
            auto best_v = objective(sb, se);
            for (int g = 0; g < points; ++g) {
                auto v = objective(base_b + grid_w[g] * p.cb[i],
                                   base_e + grid_w[g] * p.ce[i]);
                if (better(v, best_v)) {
                    best_v = v;
                    best_t = grid[g];
                }
            }

            if (!opt.phase_bits && points > 2) {
                // golden-section refinement inside +-1 grid step
                const double step = two_pi / points;
                double lo = best_t - step, hi = best_t + step;
                const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
                double x1 = hi - gr * (hi - lo);
                double x2 = lo + gr * (hi - lo);
                auto eval = [&](double t) {
                    const cplx w = std::polar(1.0, t);
                    return objective(base_b + w * p.cb[i],
                                     base_e + w * p.ce[i]);
                };
                auto v1 = eval(x1), v2 = eval(x2);
                for (int it = 0; it < 24; ++it) {
                    if (better(v1, v2)) {
                        hi = x2;
                        x2 = x1;
                        v2 = v1;
                        x1 = hi - gr * (hi - lo);
                        v1 = eval(x1);
                    } else {
                        lo = x1;
                        x1 = x2;
                        v1 = v2;
                        x2 = lo + gr * (hi - lo);
                        v2 = eval(x2);
                    }
                }
                const double mid = 0.5 * (lo + hi);
                auto vm = eval(mid);
                if (better(vm, best_v)) {
                    best_v = vm;
                    best_t = std::fmod(mid, two_pi);
                    if (best_t < 0.0)
                        best_t += two_pi;
                }
            }

            theta[i] = best_t;
            const cplx w_new = std::polar(1.0, best_t);
            sb = base_b + w_new * p.cb[i];
            se = base_e + w_new * p.ce[i];
        }
        const double rate = rate_from_ratio(objective(sb, se));
        if (rate - last_rate < opt.tol_bits)
            break;
        last_rate = rate;
    }
    return {std::move(theta), objective(sb, se)};
}

} // namespace

SecrecyResult optimize_phases_secrecy(const ChannelSet& channels,
                                      const Scenario& scenario,
                                      const PhaseOptimizerOptions& options) {
    scenario.validate();
    const std::size_t n = channels.n_elements();

    std::vector<double> beta =
        options.beta.empty() ? std::vector<double>(n, 1.0) : options.beta;
    if (beta.size() != n)
        throw std::invalid_argument("optimize_phases_secrecy: beta length");

    if (n == 0) {
        IrsConfig empty;
        return {empty, evaluate_config(channels, scenario, empty)};
    }

    AscentProblem p;
    p.db = channels.h_ab;
    p.de = channels.has_eve ? channels.h_ae : cplx{};
    p.s = scenario.tx_power_w / scenario.noise_power_w;
    p.cb.resize(n);
    p.ce.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.cb[i] = beta[i] * channels.h_ai[i] * channels.h_ib[i];
        p.ce[i] = channels.has_eve ? beta[i] * channels.h_ai[i] * channels.h_ie[i]
                                   : cplx{};
    }

    // initializations: all-zero phases, Bob alignment, optional caller-given,
    // then random restarts
    std::vector<std::vector<double>> inits;
    inits.emplace_back(n, 0.0);
    inits.push_back(align_phases_for_bob(channels, beta).theta);
    if (options.initial_theta) {
        if (options.initial_theta->size() != n)
            throw std::invalid_argument("optimize_phases_secrecy: initial_theta length");
        inits.push_back(*options.initial_theta);
    }
    Rng rng = make_rng(options.seed, 0x5ec4ecfULL);
    std::uniform_real_distribution<double> uni(0.0, two_pi);
    for (int r = 0; r < options.restarts; ++r) {
        std::vector<double> t(n);
        for (double& v : t)
            v = uni(rng);
        inits.push_back(std::move(t));
    }

    AscentRun best;
    bool have = false;
    for (auto& init : inits) {
        AscentRun run = ascend(p, std::move(init), options);
        if (!have ||
            run.value.first * best.value.second >
                best.value.first * run.value.second) {
            best = std::move(run);
            have = true;
        }
    }

    IrsConfig config;
    config.beta = std::move(beta);
    config.theta = std::move(best.theta);
    config.phase_bits = options.phase_bits;
    return {config, evaluate_config(channels, scenario, config)};
}

SecrecyTrial secrecy_trial(Scenario scenario, std::size_t n_elements,
                           std::uint64_t seed,
                           const PhaseOptimizerOptions& options) {
    scenario.n_elements = n_elements;
    Rng rng(seed);
    const ChannelSet cs = sample_channel_set(scenario, rng);

    PhaseOptimizerOptions opt = options;
    opt.seed = derive_seed(seed, 0x0b7);
    const SecrecyResult res = optimize_phases_secrecy(cs, scenario, opt);

    IrsConfig aligned = align_phases_for_bob(
        cs, opt.beta.empty() ? std::vector<double>(n_elements, 1.0) : opt.beta);
    if (opt.phase_bits)
        aligned = quantize_phases(aligned, *opt.phase_bits);
    const SecrecyOutcome main_only = evaluate_config(cs, scenario, aligned);

    return {res.outcome.secrecy_rate, main_only.rate_main};
}

ResultTable avg_secrecy_curve(const Scenario& scenario_template,
                              const std::vector<std::size_t>& n_values,
                              std::size_t trials, std::uint64_t root_seed,
                              const PhaseOptimizerOptions& options,
                              int threads) {
    if (trials < 1)
        throw std::invalid_argument("avg_secrecy_curve: trials must be >= 1");
    ResultTable table;
    table.columns = {"n_elements", "avg_secrecy_rate", "avg_main_rate"};
    table.root_seed = root_seed;
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        std::vector<SecrecyTrial> results(trials);
        parallel_for(trials, threads, [&](std::size_t t) {
            results[t] = secrecy_trial(scenario_template, n_values[i],
                                       derive_seed(root_seed, i, t), options);
        });
        double sum_s = 0.0, sum_m = 0.0;
        for (const auto& r : results) {
            sum_s += r.secrecy_rate;
            sum_m += r.main_rate;
        }
        const auto tn = static_cast<double>(trials);
        table.add_row({static_cast<double>(n_values[i]), sum_s / tn, sum_m / tn});
    }
    return table;
}

} // namespace seclab
