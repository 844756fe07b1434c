#include "seclab/covert.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "seclab/parallel.hpp"
#include "seclab/rng.hpp"

namespace seclab {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

void CovertnessParams::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("CovertnessParams: epsilon must be in (0,1)");
    if (blocklength < 1)
        throw std::invalid_argument("CovertnessParams: blocklength must be >= 1");
}

bool perfect_covertness_achievable(const ChannelSet& channels) {
    if (!channels.has_willie)
        throw std::invalid_argument(
            "perfect_covertness_achievable: Willie links missing");
    const double cascade =
        max_cascade_magnitude(channels.h_ai, channels.h_iw);
    return cascade >= std::abs(channels.h_aw);
}

IrsConfig nulling_config(const ChannelSet& channels) {
    if (!channels.has_willie)
        throw std::invalid_argument("nulling_config: Willie links missing");
    const std::size_t n = channels.n_elements();
    const double direct_mag = std::abs(channels.h_aw);
    if (direct_mag == 0.0)
        return IrsConfig::uniform(n, 0.0, 0.0);
    const double cascade = max_cascade_magnitude(channels.h_ai, channels.h_iw);
    if (cascade < direct_mag)
        throw feasibility_error("nulling_config: cascade weaker than direct link",
                                0.0);
    const double scale = direct_mag / cascade;
    const double target = std::numbers::pi + std::arg(channels.h_aw);
    IrsConfig config;
    config.beta.assign(n, scale);
    config.theta.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double t = target - std::arg(channels.h_ai[i] * channels.h_iw[i]);
        t = std::fmod(t, two_pi);
        if (t < 0.0)
            t += two_pi;
        config.theta[i] = t;
    }
    return config;
}

std::vector<double> CovertGrids::beta_values() const {
    if (beta_levels < 2)
        throw std::invalid_argument("CovertGrids: beta_levels must be >= 2");
    std::vector<double> v(beta_levels);
    for (std::size_t i = 0; i < beta_levels; ++i)
        v[i] = static_cast<double>(i) / static_cast<double>(beta_levels - 1);
    return v;
}

std::vector<double> CovertGrids::theta_values() const {
    if (theta_points < 1)
        throw std::invalid_argument("CovertGrids: theta_points must be >= 1");
    std::vector<double> v(theta_points);
    for (std::size_t i = 0; i < theta_points; ++i)
        v[i] = two_pi * static_cast<double>(i) / static_cast<double>(theta_points);
    return v;
}

std::vector<double> CovertGrids::power_values() const {
    if (!power_grid_w.empty()) {
        auto v = power_grid_w;
        std::sort(v.begin(), v.end());
        return v;
    }
    if (power_points < 1 || !(power_min_w > 0.0) || !(power_max_w >= power_min_w))
        throw std::invalid_argument("CovertGrids: bad power grid");
    std::vector<double> v(power_points);
    if (power_points == 1) {
        v[0] = power_min_w;
        return v;
    }
    const double lmin = std::log(power_min_w), lmax = std::log(power_max_w);
    for (std::size_t i = 0; i < power_points; ++i)
        v[i] = std::exp(lmin + (lmax - lmin) * static_cast<double>(i) /
                                   static_cast<double>(power_points - 1));
    return v;
}

namespace {

struct LinkGeom {
    double gain;
    double los_phase;
};

LinkGeom link_geom(const Scenario& sc, const Position& a, const Position& b,
                   double exponent) {
    const double d = distance(a, b);
    return {path_loss(d, exponent, sc.path_loss.ref_gain_db),
            -two_pi * d / sc.los_wavelength_m};
}

cplx draw_link(const LinkGeom& g, const Scenario& sc, Rng& rng) {
    return std::sqrt(g.gain) * sample_small_scale(sc.rician, rng, g.los_phase);
}

// Willie-side links are known only in distribution: the LoS phase is not
// predictable by Alice, so each Monte-Carlo draw rotates it uniformly.
cplx draw_unknown_link(const LinkGeom& g, const Scenario& sc, Rng& rng) {
    std::uniform_real_distribution<double> uni(0.0, two_pi);
    const double phase = uni(rng);
    return std::sqrt(g.gain) * sample_small_scale(sc.rician, rng, phase);
}

// Candidate total order: outage, then P, then beta lexicographic, then
// theta lexicographic.
struct Candidate {
    double outage = 0.0;
    double power = 0.0;
    std::vector<double> beta, theta;
    double covertness = 0.0;
};

bool strictly_better(const Candidate& a, const Candidate& b) {
    if (a.outage != b.outage)
        return a.outage < b.outage;
    if (a.power != b.power)
        return a.power < b.power;
    if (a.beta != b.beta)
        return a.beta < b.beta;
    return a.theta < b.theta;
}

// Shared Monte-Carlo context for one optimization call. The Willie draws
// and residual Bob draws are fixed up front and reused across all
// candidates (common random numbers).
struct CovertProblem {
    std::size_t n;
    double noise_w;
    double snr_gate; // 2^R - 1
    std::vector<cplx> willie_direct;             // [m]
    std::vector<std::vector<cplx>> willie_casc;  // [m][n]
    std::vector<cplx> bob_direct;                // [k]
    std::vector<std::vector<cplx>> bob_casc;     // [k][n]
    const DetectorTable* table;

    double covertness(double power, const std::vector<cplx>& w) const {
        double sum = 0.0;
        for (std::size_t m = 0; m < willie_direct.size(); ++m) {
            cplx h = willie_direct[m];
            const auto& c = willie_casc[m];
            for (std::size_t i = 0; i < n; ++i)
                h += w[i] * c[i];
            sum += (*table)(power * std::norm(h) / noise_w);
        }
        return sum / static_cast<double>(willie_direct.size());
    }

    double outage(double power, const std::vector<cplx>& w) const {
        if (power <= 0.0)
            return snr_gate > 0.0 ? 1.0 : 0.0;
        const double mag_gate = snr_gate * noise_w / power;
        std::size_t fails = 0;
        for (std::size_t k = 0; k < bob_direct.size(); ++k) {
            cplx h = bob_direct[k];
            const auto& c = bob_casc[k];
            for (std::size_t i = 0; i < n; ++i)
                h += w[i] * c[i];
            if (std::norm(h) < mag_gate)
                ++fails;
        }
        return static_cast<double>(fails) /
               static_cast<double>(bob_direct.size());
    }
};

std::vector<cplx> weights(const std::vector<double>& beta,
                          const std::vector<double>& theta) {
    std::vector<cplx> w(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i)
        w[i] = std::polar(beta[i], theta[i]);
    return w;
}

} // namespace

CovertDesign covert_outage_optimize(const Scenario& scenario,
                                    const ChannelSet& csi,
                                    const CovertnessParams& covert,
                                    double target_rate_bits,
                                    const CovertGrids& grids,
                                    std::uint64_t seed) {
    scenario.validate();
    covert.validate();
    if (!scenario.willie)
        throw std::invalid_argument("covert_outage_optimize: no Willie position");
    if (target_rate_bits < 0.0)
        throw std::invalid_argument("covert_outage_optimize: negative rate");

    const std::size_t n = csi.n_elements();
    const auto betas = grids.beta_values();
    const auto thetas = grids.theta_values();
    const auto powers = grids.power_values();

    CovertProblem p;
    p.n = n;
    p.noise_w = scenario.noise_power_w;
    p.snr_gate = std::exp2(target_rate_bits) - 1.0;

    const DetectorTable table(covert.blocklength);
    p.table = &table;

    // Willie-side links known only in distribution: redraw them.
    {
        const auto g_aw = link_geom(scenario, scenario.alice, *scenario.willie,
                                    scenario.path_loss.exponent_direct);
        const auto g_iw = link_geom(scenario, scenario.irs, *scenario.willie,
                                    scenario.path_loss.exponent_irs);
        Rng rng = make_rng(seed, 0x77);
        p.willie_direct.resize(grids.willie_draws);
        p.willie_casc.resize(grids.willie_draws);
        for (std::size_t m = 0; m < grids.willie_draws; ++m) {
            p.willie_direct[m] = draw_unknown_link(g_aw, scenario, rng);
            auto& casc = p.willie_casc[m];
            casc.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                casc[i] = csi.h_ai[i] * draw_unknown_link(g_iw, scenario, rng);
        }
    }

    // Residual legitimate-link fading around the given realization.
    {
        Rng rng = make_rng(seed, 0xb0b);
        const double rho = grids.residual_rho;
        const double mix = std::sqrt(1.0 - rho * rho);
        std::normal_distribution<double> nd(0.0, 1.0 / std::sqrt(2.0));
        auto perturb = [&](cplx total, cplx scatter, double var) {
            const cplx fresh = std::sqrt(var) * cplx(nd(rng), nd(rng));
            return (total - scatter) + rho * scatter + mix * fresh;
        };
        p.bob_direct.resize(grids.outage_draws);
        p.bob_casc.resize(grids.outage_draws);
        for (std::size_t k = 0; k < grids.outage_draws; ++k) {
            p.bob_direct[k] = perturb(csi.h_ab, csi.s_ab, csi.var_ab);
            auto& casc = p.bob_casc[k];
            casc.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                const cplx ai = perturb(csi.h_ai[i], csi.s_ai[i], csi.var_ai);
                const cplx ib = perturb(csi.h_ib[i], csi.s_ib[i], csi.var_ib);
                casc[i] = ai * ib;
            }
        }
    }

    const double required = 1.0 - covert.epsilon;
    Candidate best;
    bool have_best = false;
    double best_covertness_seen = 0.0;

    auto consider = [&](double power, const std::vector<double>& beta,
                        const std::vector<double>& theta) {
        const auto w = weights(beta, theta);
        const double xi = p.covertness(power, w);
        best_covertness_seen = std::max(best_covertness_seen, xi);
        if (xi < required)
            return;
        Candidate cand;
        cand.outage = p.outage(power, w);
        cand.power = power;
        cand.beta = beta;
        cand.theta = theta;
        cand.covertness = xi;
        if (!have_best || strictly_better(cand, best)) {
            best = std::move(cand);
            have_best = true;
        }
    };

    const bool full =
        grids.search == CovertGrids::Search::full ||
        (grids.search == CovertGrids::Search::automatic && n <= 2);

    if (full) {
        std::vector<std::size_t> bi(n, 0), ti(n, 0);
        std::vector<double> beta(n), theta(n);
        for (double power : powers) {
            // enumerate the per-element (beta, theta) product grid
            std::fill(bi.begin(), bi.end(), 0);
            std::fill(ti.begin(), ti.end(), 0);
            for (;;) {
                for (std::size_t i = 0; i < n; ++i) {
                    beta[i] = betas[bi[i]];
                    theta[i] = thetas[ti[i]];
                }
                consider(power, beta, theta);
                // odometer increment (theta fastest)
                std::size_t i = n;
                for (; i-- > 0;) {
                    if (++ti[i] < thetas.size())
                        break;
                    ti[i] = 0;
                    if (++bi[i] < betas.size())
                        break;
                    bi[i] = 0;
                }
                if (i == static_cast<std::size_t>(-1))
                    break;
            }
        }
    } else {
        // Coordinate descent per power level, initialized at beta = 1 and
        // on-grid Bob-aligned phases. Infeasible states descend toward
        // feasibility (higher covertness) first.
        std::vector<double> theta_init(n);
        {
            const double ref = std::arg(csi.h_ab);
            for (std::size_t i = 0; i < n; ++i) {
                double t = ref - std::arg(csi.h_ai[i] * csi.h_ib[i]);
                t = std::fmod(t, two_pi);
                if (t < 0.0)
                    t += two_pi;
                // snap to grid
                double bestd = 1e300, snapped = thetas.front();
                for (double g : thetas) {
                    double d = std::abs(g - t);
                    d = std::min(d, two_pi - d);
                    if (d < bestd) {
                        bestd = d;
                        snapped = g;
                    }
                }
                theta_init[i] = snapped;
            }
        }

        for (double power : powers) {
            std::vector<double> beta(n, 1.0), theta = theta_init;
            auto w = weights(beta, theta);
            double xi = p.covertness(power, w);
            best_covertness_seen = std::max(best_covertness_seen, xi);
            bool feas = xi >= required;
            double out = feas ? p.outage(power, w) : 1.0;

            // score: feasible states by outage, infeasible by -covertness
            auto improves = [&](bool cf, double cout, double cxi) {
                if (cf != feas)
                    return cf;
                return cf ? cout < out : cxi > xi;
            };

            for (int sweep = 0; sweep < grids.coordinate_sweeps; ++sweep) {
                bool changed = false;
                for (std::size_t i = 0; i < n; ++i) {
                    double cur_b = beta[i], cur_t = theta[i];
                    double pick_b = cur_b, pick_t = cur_t;
                    // scan beta downward so equally-good moves keep the
                    // largest amplitude (matches the unconstrained optimum)
                    for (auto bit = betas.rbegin(); bit != betas.rend(); ++bit) {
                        const double b = *bit;
                        for (double t : thetas) {
                            if (b == cur_b && t == cur_t)
                                continue;
                            w[i] = std::polar(b, t);
                            const double cxi = p.covertness(power, w);
                            best_covertness_seen =
                                std::max(best_covertness_seen, cxi);
                            const bool cf = cxi >= required;
                            const double cout =
                                cf ? p.outage(power, w) : 1.0;
                            if (improves(cf, cout, cxi)) {
                                feas = cf;
                                out = cout;
                                xi = cxi;
                                pick_b = b;
                                pick_t = t;
                                changed = true;
                            }
                        }
                    }
                    beta[i] = pick_b;
                    theta[i] = pick_t;
                    w[i] = std::polar(pick_b, pick_t);
                }
                if (!changed)
                    break;
            }

            if (feas) {
                Candidate cand;
                cand.outage = out;
                cand.power = power;
                cand.beta = beta;
                cand.theta = theta;
                cand.covertness = xi;
                if (!have_best || strictly_better(cand, best)) {
                    best = std::move(cand);
                    have_best = true;
                }
            }
        }
    }

    if (!have_best)
        throw feasibility_error("covert_outage_optimize: no feasible candidate",
                                best_covertness_seen);

    CovertDesign design;
    design.power_w = best.power;
    design.config.beta = std::move(best.beta);
    design.config.theta = std::move(best.theta);
    design.outage_prob = best.outage;
    design.covertness_value = best.covertness;
    return design;
}

ResultTable perfect_covertness_curve(const Scenario& scenario_template,
                                     const std::vector<Position>& irs_positions,
                                     const std::vector<std::size_t>& n_values,
                                     std::size_t trials, std::uint64_t root_seed,
                                     int threads) {
    if (trials < 1)
        throw std::invalid_argument("perfect_covertness_curve: trials >= 1");
    if (!scenario_template.willie)
        throw std::invalid_argument("perfect_covertness_curve: no Willie");
    ResultTable table;
    table.columns = {"position_index", "n_elements", "probability"};
    table.root_seed = root_seed;
    for (std::size_t pi = 0; pi < irs_positions.size(); ++pi) {
        for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
            Scenario sc = scenario_template;
            sc.irs = irs_positions[pi];
            sc.n_elements = n_values[ni];
            std::vector<unsigned char> hit(trials, 0);
            parallel_for(trials, threads, [&](std::size_t t) {
                Rng rng = make_rng(root_seed, pi, ni, t);
                const ChannelSet cs = sample_channel_set(sc, rng);
                hit[t] = perfect_covertness_achievable(cs) ? 1 : 0;
            });
            std::size_t count = 0;
            for (auto h : hit)
                count += h;
            table.add_row({static_cast<double>(pi),
                           static_cast<double>(n_values[ni]),
                           static_cast<double>(count) /
                               static_cast<double>(trials)});
        }
    }
    return table;
}

double MixtureDetectionResult::average() const {
    double sum = 0.0;
    for (double e : errors)
        sum += e;
    return errors.empty() ? 1.0 : sum / static_cast<double>(errors.size());
}

MixtureDetectionResult mixture_detection_error(const std::vector<double>& snrs,
                                               std::int64_t blocklength) {
    if (blocklength < 1)
        throw std::invalid_argument("mixture_detection_error: blocklength >= 1");
    const auto L = static_cast<double>(blocklength);
    double max_snr = 0.0;
    for (double s : snrs) {
        if (s < 0.0 || !std::isfinite(s))
            throw std::invalid_argument("mixture_detection_error: bad snr");
        max_snr = std::max(max_snr, s);
    }

    auto mixture_error = [&](double u) {
        const double p_fa = boost::math::gamma_q(L, u);
        double md = 0.0;
        for (double s : snrs)
            md += boost::math::gamma_p(L, u / (1.0 + s));
        return p_fa + md / static_cast<double>(snrs.size());
    };

    // coarse log grid, then golden-section refinement around the minimum
    const double u_lo = 0.3 * L;
    const double u_hi = 3.0 * L * (1.0 + max_snr);
    const std::size_t points = 512;
    double best_u = u_lo, best_f = mixture_error(u_lo);
    const double llo = std::log(u_lo), lhi = std::log(u_hi);
    for (std::size_t i = 1; i < points; ++i) {
        const double u = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                            static_cast<double>(points - 1));
        const double f = mixture_error(u);
        if (f < best_f) {
            best_f = f;
            best_u = u;
        }
    }
    {
        const double step = (lhi - llo) / static_cast<double>(points - 1);
        double lo = best_u * std::exp(-step), hi = best_u * std::exp(step);
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = mixture_error(x1), f2 = mixture_error(x2);
        for (int it = 0; it < 40; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = mixture_error(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = mixture_error(x2);
            }
        }
        const double mid = 0.5 * (lo + hi);
        if (mixture_error(mid) < best_f)
            best_u = mid;
    }

    MixtureDetectionResult res;
    res.threshold = best_u;
    res.false_alarm = boost::math::gamma_q(L, best_u);
    res.errors.resize(snrs.size());
    for (std::size_t i = 0; i < snrs.size(); ++i)
        res.errors[i] =
            res.false_alarm + boost::math::gamma_p(L, best_u / (1.0 + snrs[i]));
    return res;
}

ResultTable random_phase_uncertainty_curve(const Scenario& scenario_template,
                                           const std::vector<std::size_t>& n_values,
                                           const CovertnessParams& covert,
                                           std::size_t trials,
                                           std::uint64_t root_seed) {
    if (trials < 1)
        throw std::invalid_argument("random_phase_uncertainty_curve: trials >= 1");
    covert.validate();
    if (!scenario_template.willie)
        throw std::invalid_argument("random_phase_uncertainty_curve: no Willie");

    std::size_t max_n = 0;
    for (auto n : n_values)
        max_n = std::max(max_n, n);

    // one channel realization; only the phase pattern varies per trial
    Scenario sc = scenario_template;
    sc.n_elements = max_n;
    Rng chan_rng = make_rng(root_seed, 0);
    const ChannelSet cs = sample_channel_set(sc, chan_rng);

    std::vector<cplx> cascade(max_n);
    for (std::size_t i = 0; i < max_n; ++i)
        cascade[i] = cs.h_ai[i] * cs.h_iw[i];

    ResultTable table;
    table.columns = {"n_elements", "avg_detection_error"};
    table.root_seed = root_seed;

    for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
        const std::size_t n = n_values[ni];
        std::vector<double> snrs(trials);
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng = make_rng(root_seed, 1, t);
            std::uniform_real_distribution<double> uni(0.0, two_pi);
            cplx h = cs.h_aw;
            for (std::size_t i = 0; i < n; ++i)
                h += std::polar(1.0, uni(rng)) * cascade[i];
            snrs[t] = sc.tx_power_w * std::norm(h) / sc.noise_power_w;
        }
        const auto res = mixture_detection_error(snrs, covert.blocklength);
        table.add_row({static_cast<double>(n), res.average()});
    }
    return table;
}

} // namespace seclab
