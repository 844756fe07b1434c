// Acceptance suite: one pass/fail line per criterion. Exit code = number of
// failed criteria. Long-running Monte-Carlo checks; see README for budgets.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "seclab/covert.hpp"
#include "seclab/csi.hpp"
#include "seclab/detector.hpp"
#include "seclab/experiment.hpp"
#include "seclab/secrecy.hpp"

using namespace seclab;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Outcome {
    bool ok = true;
    std::string detail;
};

void note(Outcome& o, bool cond, const std::string& what) {
    if (!cond) {
        o.ok = false;
        if (!o.detail.empty())
            o.detail += "; ";
        o.detail += what;
    }
}

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& v) {
    const auto n = static_cast<double>(v.size());
    double m = 0.0;
    for (double x : v)
        m += x;
    m /= n;
    double s2 = 0.0;
    for (double x : v)
        s2 += (x - m) * (x - m);
    return {m, v.size() > 1 ? std::sqrt(s2 / (n - 1.0) / n) : 0.0};
}

// ---------------------------------------------------------------- criterion 1

Outcome criterion1() {
    Outcome o;
    const ExperimentConfig cfg = preset("fig2");
    const std::size_t points = cfg.sweep_values.size();
    std::vector<MeanSe> sec(points), gap(points);
    for (std::size_t i = 0; i < points; ++i) {
        const auto n = static_cast<std::size_t>(cfg.sweep_values[i]);
        std::vector<double> s(cfg.trials), g(cfg.trials);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const SecrecyTrial r = secrecy_trial(
                cfg.scenario, n, derive_seed(cfg.root_seed, i, t), cfg.optimizer);
            s[t] = r.secrecy_rate;
            g[t] = r.main_rate - r.secrecy_rate;
        }
        sec[i] = mean_se(s);
        gap[i] = mean_se(g);
    }
    for (std::size_t i = 0; i + 1 < points; ++i) {
        const double d_sec = sec[i + 1].mean - sec[i].mean;
        const double se_sec = std::hypot(sec[i].se, sec[i + 1].se);
        note(o, d_sec > 2.0 * se_sec,
             "secrecy gap at step " + std::to_string(i) + " = " +
                 std::to_string(d_sec) + " <= 2se " + std::to_string(2 * se_sec));
        const double d_gap = gap[i].mean - gap[i + 1].mean;
        const double se_gap = std::hypot(gap[i].se, gap[i + 1].se);
        note(o, d_gap > 2.0 * se_gap,
             "main-secrecy gap step " + std::to_string(i) + " = " +
                 std::to_string(d_gap) + " <= 2se " + std::to_string(2 * se_gap));
    }
    return o;
}

// ---------------------------------------------------------------- criterion 2

Outcome criterion2() {
    Outcome o;
    const ExperimentConfig cfg = preset("fig3");
    const ResultTable t = run_experiment(cfg, 1, true);
    const std::size_t positions = cfg.irs_candidates.size();
    const std::size_t points = cfg.sweep_values.size();
    note(o, t.rows.size() == positions * points, "unexpected row count");
    bool any_high = false;
    for (std::size_t pi = 0; pi < positions; ++pi) {
        for (std::size_t ni = 0; ni + 1 < points; ++ni) {
            const double a = t.rows[pi * points + ni][2];
            const double b = t.rows[pi * points + ni + 1][2];
            note(o, b >= a,
                 "probability decreases at position " + std::to_string(pi) +
                     " step " + std::to_string(ni));
        }
        if (t.rows[pi * points + points - 1][2] >= 0.99)
            any_high = true;
    }
    note(o, any_high, "no position reaches 0.99 at the largest N");
    return o;
}

// ---------------------------------------------------------------- criterion 3

Outcome criterion3() {
    Outcome o;
    const ExperimentConfig cfg = preset("fig4");
    const ResultTable t = run_experiment(cfg, 1, true);
    const std::size_t points = cfg.sweep_values.size();
    const std::size_t n = cfg.scenario.n_elements;
    note(o, t.rows.size() == points * cfg.trials, "unexpected row count");
    if (!o.ok)
        return o;

    // per-trial mean amplitude, grouped by sweep point (rows are paired
    // across epsilon: trial r shares its channel realization)
    std::vector<std::vector<double>> bbar(points,
                                          std::vector<double>(cfg.trials));
    for (std::size_t i = 0; i < points; ++i)
        for (std::size_t r = 0; r < cfg.trials; ++r) {
            const auto& row = t.rows[i * cfg.trials + r];
            double sum = 0.0;
            for (std::size_t e = 0; e < n; ++e) {
                const double b = row[3 + e];
                note(o, b >= 0.0 && b <= 1.0, "beta outside [0,1]");
                sum += b;
            }
            bbar[i][r] = sum / static_cast<double>(n);
        }

    for (std::size_t i = 0; i + 1 < points; ++i)
        note(o, mean_se(bbar[i + 1]).mean >= mean_se(bbar[i]).mean,
             "mean beta decreases at step " + std::to_string(i));

    std::vector<double> paired(cfg.trials);
    for (std::size_t r = 0; r < cfg.trials; ++r)
        paired[r] = bbar[points - 1][r] - bbar[0][r];
    const MeanSe d = mean_se(paired);
    note(o, d.mean > 2.0 * d.se,
         "endpoint beta gap " + std::to_string(d.mean) + " <= 2se " +
             std::to_string(2 * d.se));

    // vacuous constraint: the optimizer must return beta = 1 exactly
    CovertnessParams vac = cfg.covert;
    vac.epsilon = 0.999999;
    for (std::size_t r = 0; r < 20; ++r) {
        Rng rng = make_rng(cfg.root_seed, 0, r);
        const ChannelSet csi = sample_channel_set(cfg.scenario, rng);
        const CovertDesign des = covert_outage_optimize(
            cfg.scenario, csi, vac, cfg.target_rate_bits, cfg.grids,
            derive_seed(cfg.root_seed, 0, r, 1));
        for (double b : des.config.beta)
            note(o, b == 1.0,
                 "vacuous-epsilon beta != 1 at realization " + std::to_string(r));
    }
    return o;
}

// ---------------------------------------------------------------- criterion 4

Outcome criterion4() {
    Outcome o;
    const ExperimentConfig cfg = preset("fig5");
    const std::size_t points = cfg.sweep_values.size();
    std::vector<EstPointStats> stats(points);
    for (std::size_t i = 0; i < points; ++i)
        stats[i] = est_point(cfg.scenario, cfg.sweep_values[i], cfg.est,
                             cfg.trials, cfg.root_seed, i, 1);

    std::size_t best = 0;
    for (std::size_t i = 1; i < points; ++i)
        if (stats[i].est(cfg.est.r_s_bits) > stats[best].est(cfg.est.r_s_bits))
            best = i;
    note(o, best > 0 && best + 1 < points, "EST maximum is at an endpoint");
    for (std::size_t e : {std::size_t{0}, points - 1}) {
        const double margin = stats[best].est(cfg.est.r_s_bits) -
                              stats[e].est(cfg.est.r_s_bits);
        const double se = std::hypot(stats[best].est_stderr(cfg.est.r_s_bits),
                                     stats[e].est_stderr(cfg.est.r_s_bits));
        note(o, margin > 2.0 * se,
             "EST margin over endpoint " + std::to_string(e) + " = " +
                 std::to_string(margin) + " <= 2se " + std::to_string(2 * se));
    }

    for (std::size_t i = 0; i + 1 < points; ++i) {
        const auto tn = static_cast<double>(cfg.trials);
        const double a = stats[i].p_to(), b = stats[i + 1].p_to();
        const double se = std::sqrt((a * (1 - a) + b * (1 - b)) / tn);
        note(o, b <= a + 2.0 * se,
             "p_to increases at step " + std::to_string(i));
    }

    for (std::size_t i = 0; i < points; ++i) {
        const double product = effective_secrecy_throughput(
            cfg.est.r_s_bits, stats[i].p_to(), stats[i].p_so());
        note(o, stats[i].est(cfg.est.r_s_bits) == product,
             "product identity broken at row " + std::to_string(i));
    }
    return o;
}

// --------------------------------------------------------------- criterion 5a

Outcome criterion5a() {
    Outcome o;
    Scenario sc;
    sc.alice = {0, 5};
    sc.bob = {35, 10};
    sc.eve = Position{75, 10};
    sc.irs = {55, 0};
    sc.n_elements = 2;
    sc.rician.k_factor_db = 2.0;
    PhaseOptimizerOptions opt;
    opt.phase_bits = 6;
    opt.restarts = 4;
    int worse = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Rng rng = make_rng(50001, trial);
        const ChannelSet cs = sample_channel_set(sc, rng);
        opt.seed = derive_seed(50001, trial, 1);
        const double found =
            optimize_phases_secrecy(cs, sc, opt).outcome.secrecy_rate;
        double brute = 0.0;
        for (int a = 0; a < 64; ++a)
            for (int b = 0; b < 64; ++b) {
                IrsConfig cfgq;
                cfgq.beta = {1.0, 1.0};
                cfgq.theta = {two_pi * a / 64.0, two_pi * b / 64.0};
                brute = std::max(brute,
                                 evaluate_config(cs, sc, cfgq).secrecy_rate);
            }
        if (found < brute - 0.01)
            ++worse;
    }
    note(o, worse == 0,
         std::to_string(worse) + "/1000 instances below brute force - 0.01");
    return o;
}

// --------------------------------------------------------------- criterion 5b
// Independent exhaustive enumeration coded against the documented
// reproducibility contract of covert_outage_optimize.

struct OracleDesign {
    bool feasible = false;
    double power = 0.0;
    std::vector<double> beta, theta;
    double outage = 0.0;
    double covertness = 0.0;
};

OracleDesign oracle_covert(const Scenario& sc, const ChannelSet& csi,
                           const CovertnessParams& covert, double rate_bits,
                           const CovertGrids& grids, std::uint64_t seed) {
    const std::size_t n = csi.n_elements();
    const auto betas = grids.beta_values();
    const auto thetas = grids.theta_values();
    const auto powers = grids.power_values();
    const DetectorTable table(covert.blocklength);
    const double snr_gate = std::exp2(rate_bits) - 1.0;
    const double required = 1.0 - covert.epsilon;

    // Willie stream: make_rng(seed, 0x77); per draw h_aw then per-element
    // h_iw, each a uniform LoS phase followed by the Rician sample.
    std::vector<cplx> wd(grids.willie_draws);
    std::vector<std::vector<cplx>> wc(grids.willie_draws,
                                      std::vector<cplx>(n));
    {
        const double g_aw = path_loss(distance(sc.alice, *sc.willie),
                                      sc.path_loss.exponent_direct,
                                      sc.path_loss.ref_gain_db);
        const double g_iw = path_loss(distance(sc.irs, *sc.willie),
                                      sc.path_loss.exponent_irs,
                                      sc.path_loss.ref_gain_db);
        Rng rng = make_rng(seed, 0x77);
        auto unknown = [&](double gain) {
            std::uniform_real_distribution<double> uni(0.0, two_pi);
            const double phase = uni(rng);
            return std::sqrt(gain) * sample_small_scale(sc.rician, rng, phase);
        };
        for (std::size_t m = 0; m < grids.willie_draws; ++m) {
            wd[m] = unknown(g_aw);
            for (std::size_t i = 0; i < n; ++i)
                wc[m][i] = csi.h_ai[i] * unknown(g_iw);
        }
    }

    // Residual stream: make_rng(seed, 0xb0b); per draw h_ab then per-element
    // (h_ai, h_ib), Gauss-Markov on the scattered part.
    std::vector<cplx> bd(grids.outage_draws);
    std::vector<std::vector<cplx>> bc(grids.outage_draws,
                                      std::vector<cplx>(n));
    {
        Rng rng = make_rng(seed, 0xb0b);
        const double rho = grids.residual_rho;
        const double mix = std::sqrt(1.0 - rho * rho);
        std::normal_distribution<double> nd(0.0, 1.0 / std::sqrt(2.0));
        auto perturb = [&](cplx total, cplx scatter, double var) {
            const cplx fresh = std::sqrt(var) * cplx(nd(rng), nd(rng));
            return (total - scatter) + rho * scatter + mix * fresh;
        };
        for (std::size_t k = 0; k < grids.outage_draws; ++k) {
            bd[k] = perturb(csi.h_ab, csi.s_ab, csi.var_ab);
            for (std::size_t i = 0; i < n; ++i)
                bc[k][i] = perturb(csi.h_ai[i], csi.s_ai[i], csi.var_ai) *
                           perturb(csi.h_ib[i], csi.s_ib[i], csi.var_ib);
        }
    }

    auto covertness = [&](double power, const std::vector<cplx>& w) {
        double sum = 0.0;
        for (std::size_t m = 0; m < wd.size(); ++m) {
            cplx h = wd[m];
            for (std::size_t i = 0; i < n; ++i)
                h += w[i] * wc[m][i];
            sum += table(power * std::norm(h) / sc.noise_power_w);
        }
        return sum / static_cast<double>(wd.size());
    };
    auto outage = [&](double power, const std::vector<cplx>& w) {
        const double gate = snr_gate * sc.noise_power_w / power;
        std::size_t fails = 0;
        for (std::size_t k = 0; k < bd.size(); ++k) {
            cplx h = bd[k];
            for (std::size_t i = 0; i < n; ++i)
                h += w[i] * bc[k][i];
            if (std::norm(h) < gate)
                ++fails;
        }
        return static_cast<double>(fails) / static_cast<double>(bd.size());
    };

    // documented total order: outage, then power, then beta lex, then theta
    OracleDesign best;
    auto better = [](const OracleDesign& a, const OracleDesign& b) {
        if (a.outage != b.outage)
            return a.outage < b.outage;
        if (a.power != b.power)
            return a.power < b.power;
        if (a.beta != b.beta)
            return a.beta < b.beta;
        return a.theta < b.theta;
    };

    std::vector<std::size_t> idx(2 * n, 0);
    for (double power : powers) {
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            std::vector<double> beta(n), theta(n);
            std::vector<cplx> w(n);
            for (std::size_t i = 0; i < n; ++i) {
                beta[i] = betas[idx[2 * i]];
                theta[i] = thetas[idx[2 * i + 1]];
                w[i] = std::polar(beta[i], theta[i]);
            }
            const double xi = covertness(power, w);
            if (xi >= required) {
                OracleDesign cand;
                cand.feasible = true;
                cand.power = power;
                cand.beta = beta;
                cand.theta = theta;
                cand.outage = outage(power, w);
                cand.covertness = xi;
                if (!best.feasible || better(cand, best))
                    best = std::move(cand);
            }
            std::size_t i = 2 * n;
            for (; i-- > 0;) {
                const std::size_t lim =
                    (i % 2 == 0) ? betas.size() : thetas.size();
                if (++idx[i] < lim)
                    break;
                idx[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1))
                break;
        }
    }
    return best;
}

Outcome criterion5b() {
    Outcome o;
    Scenario sc;
    sc.alice = {0, 5};
    sc.bob = {80, 0};
    sc.willie = Position{100, 0};
    sc.irs = {100, 10};
    sc.n_elements = 2;
    sc.rician.k_factor_db = 5.0;
    CovertnessParams cp;
    cp.epsilon = 0.3;
    CovertGrids grids;
    grids.beta_levels = 3;
    grids.theta_points = 4;
    grids.power_points = 3;
    grids.power_min_w = 1e-4;
    grids.power_max_w = 1e-2;
    grids.willie_draws = 40;
    grids.outage_draws = 40;

    int mismatches = 0, infeasible = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Rng rng = make_rng(52001, trial);
        const ChannelSet csi = sample_channel_set(sc, rng);
        const std::uint64_t seed = derive_seed(52001, trial, 1);
        const OracleDesign want =
            oracle_covert(sc, csi, cp, 6.0, grids, seed);
        try {
            const CovertDesign got =
                covert_outage_optimize(sc, csi, cp, 6.0, grids, seed);
            const bool same = want.feasible && got.power_w == want.power &&
                              got.config.beta == want.beta &&
                              got.config.theta == want.theta &&
                              std::abs(got.outage_prob - want.outage) <= 1e-12 &&
                              std::abs(got.covertness_value - want.covertness) <=
                                  1e-12;
            if (!same)
                ++mismatches;
        } catch (const feasibility_error&) {
            ++infeasible;
            if (want.feasible)
                ++mismatches;
        }
    }
    note(o, mismatches == 0,
         std::to_string(mismatches) + "/100 instances differ from the oracle");
    note(o, infeasible < 100, "all instances infeasible; comparison vacuous");
    return o;
}

// --------------------------------------------------------------- criterion 5c
// Independent nulling oracle: sequentially project the running residual onto
// each element's reachable disk; exact in one pass for this convex problem.

Outcome criterion5c() {
    Outcome o;
    Scenario sc;
    sc.alice = {0, 5};
    sc.bob = {80, 0};
    sc.willie = Position{100, 0};
    sc.irs = {90, 10};
    sc.rician.k_factor_db = 5.0;
    int disagree = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        sc.n_elements = 1 + static_cast<std::size_t>(trial % 3);
        Rng rng = make_rng(53001, trial);
        const ChannelSet cs = sample_channel_set(sc, rng);
        cplx r = cs.h_aw;
        for (std::size_t i = 0; i < cs.n_elements(); ++i) {
            const double reach = std::abs(cs.h_ai[i] * cs.h_iw[i]);
            const double mag = std::abs(r);
            if (mag == 0.0)
                break;
            r -= std::min(reach, mag) * (r / mag);
        }
        const bool oracle = std::abs(r) <= 1e-12 * std::abs(cs.h_aw);
        if (oracle != perfect_covertness_achievable(cs))
            ++disagree;
    }
    note(o, disagree == 0, std::to_string(disagree) + "/1000 disagreements");
    return o;
}

// ---------------------------------------------------------------- criterion 6

Outcome criterion6() {
    Outcome o;
    const std::size_t draws = 1000000;
    Rng rng(60001);
    for (std::int64_t L : {std::int64_t{10}, std::int64_t{100},
                           std::int64_t{500}}) {
        for (double snr : {0.05, 0.5, 2.0}) {
            // the radiometer statistic is Gamma(L, sigma^2) under H0 and
            // Gamma(L, sigma^2 (1+snr)) under H1; draw it directly
            std::gamma_distribution<double> h0(static_cast<double>(L), 1.0);
            std::gamma_distribution<double> h1(static_cast<double>(L),
                                               1.0 + snr);
            std::vector<double> s0(draws), s1(draws);
            for (std::size_t i = 0; i < draws; ++i) {
                s0[i] = h0(rng);
                s1[i] = h1(rng);
            }
            std::sort(s0.begin(), s0.end());
            std::sort(s1.begin(), s1.end());
            // scan thresholds upward: passing an H0 value lowers the false
            // alarm, passing an H1 value raises the missed detection
            const double inv = 1.0 / static_cast<double>(draws);
            double err = 1.0, best = 1.0;
            std::size_t i0 = 0, i1 = 0;
            while (i0 < draws || i1 < draws) {
                if (i1 == draws || (i0 < draws && s0[i0] <= s1[i1])) {
                    err -= inv;
                    ++i0;
                } else {
                    err += inv;
                    ++i1;
                }
                best = std::min(best, err);
            }
            const double analytic = detection_error_energy(snr, L);
            note(o, std::abs(analytic - best) <= 0.01,
                 "xi mismatch at snr=" + std::to_string(snr) + " L=" +
                     std::to_string(L) + ": analytic " +
                     std::to_string(analytic) + " vs mc " + std::to_string(best));
        }
        note(o, detection_error_energy(0.0, L) == 1.0,
             "xi(0) != 1 at L=" + std::to_string(L));
    }
    return o;
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion7() {
    Outcome o;
    Scenario sc;
    sc.alice = {0, 5};
    sc.bob = {35, 10};
    sc.eve = Position{75, 10};
    sc.willie = Position{100, 0};
    sc.irs = {55, 0};
    sc.n_elements = 1;
    sc.rician.k_factor_db = 3.0;

    const std::size_t draws = 1000000;
    const double rho = 0.8;
    double g_ab = 0, g_ae = 0, g_aw = 0, g_ai = 0, g_ib = 0, g_ie = 0, g_iw = 0;
    cplx cross{};
    double p_true = 0, p_est = 0;
    Rng rng(70001);
    Rng err_rng(70002);
    for (std::size_t t = 0; t < draws; ++t) {
        const ChannelSet cs = sample_channel_set(sc, rng);
        g_ab += std::norm(cs.h_ab);
        g_ae += std::norm(cs.h_ae);
        g_aw += std::norm(cs.h_aw);
        g_ai += std::norm(cs.h_ai[0]);
        g_ib += std::norm(cs.h_ib[0]);
        g_ie += std::norm(cs.h_ie[0]);
        g_iw += std::norm(cs.h_iw[0]);
        const ChannelSet est = apply_csi_error(cs, CsiQuality{rho}, err_rng);
        cross += est.s_ai[0] * std::conj(cs.s_ai[0]);
        p_true += std::norm(cs.s_ai[0]);
        p_est += std::norm(est.s_ai[0]);
    }
    const auto tn = static_cast<double>(draws);
    auto check_gain = [&](double sum, const Position& a, const Position& b,
                          double exponent, const char* name) {
        const double expect =
            path_loss(distance(a, b), exponent, sc.path_loss.ref_gain_db);
        note(o, std::abs(sum / tn - expect) <= 0.01 * expect,
             std::string(name) + " mean-square gain off by more than 1%");
    };
    check_gain(g_ab, sc.alice, sc.bob, sc.path_loss.exponent_direct, "ab");
    check_gain(g_ae, sc.alice, *sc.eve, sc.path_loss.exponent_direct, "ae");
    check_gain(g_aw, sc.alice, *sc.willie, sc.path_loss.exponent_direct, "aw");
    check_gain(g_ai, sc.alice, sc.irs, sc.path_loss.exponent_irs, "ai");
    check_gain(g_ib, sc.irs, sc.bob, sc.path_loss.exponent_irs, "ib");
    check_gain(g_ie, sc.irs, *sc.eve, sc.path_loss.exponent_irs, "ie");
    check_gain(g_iw, sc.irs, *sc.willie, sc.path_loss.exponent_irs, "iw");

    const double corr = cross.real() / std::sqrt(p_true * p_est);
    note(o, std::abs(corr - rho) <= 0.01,
         "CSI-error correlation " + std::to_string(corr) + " not within 0.01 of " +
             std::to_string(rho));
    return o;
}

// ---------------------------------------------------------------- criterion 8

Outcome criterion8() {
    Outcome o;
    Scenario sc;
    sc.alice = {0, 5};
    sc.bob = {35, 10};
    sc.eve = Position{75, 10};
    sc.irs = {55, 0};
    sc.n_elements = 8;
    sc.rician.k_factor_db = 2.0;

    const std::size_t trials = 2000;
    const std::vector<int> bits{1, 2, 3}; // then continuous
    std::vector<double> avg(bits.size() + 1, 0.0);
    int per_trial_drops = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = make_rng(80001, t);
        const ChannelSet cs = sample_channel_set(sc, rng);
        PhaseOptimizerOptions opt;
        opt.restarts = 1;
        opt.grid_points = 64;
        opt.seed = derive_seed(80001, t, 1);
        double prev = -1.0;
        for (std::size_t bi = 0; bi <= bits.size(); ++bi) {
            if (bi < bits.size())
                opt.phase_bits = bits[bi];
            else
                opt.phase_bits.reset();
            const SecrecyResult res = optimize_phases_secrecy(cs, sc, opt);
            // coarser grids nest in finer ones, so seeding the next level
            // with this optimum makes per-trial monotonicity checkable
            opt.initial_theta = res.config.theta;
            if (res.outcome.secrecy_rate < prev - 1e-9)
                ++per_trial_drops;
            prev = res.outcome.secrecy_rate;
            avg[bi] += res.outcome.secrecy_rate;
        }
    }
    note(o, per_trial_drops == 0,
         std::to_string(per_trial_drops) + " per-trial resolution drops");
    for (std::size_t bi = 0; bi + 1 < avg.size(); ++bi)
        note(o, avg[bi + 1] >= avg[bi] - 1e-9,
             "average rate decreases from level " + std::to_string(bi));
    return o;
}

// ---------------------------------------------------------------- criterion 9

Outcome criterion9() {
    Outcome o;
    auto identical = [&](ExperimentConfig cfg, const std::string& name) {
        const std::string a = to_csv(run_experiment(cfg, 1, true));
        const std::string b = to_csv(run_experiment(cfg, 3, true));
        note(o, a == b, name + " CSVs differ across thread counts");
    };
    identical(preset("fig3"), "fig3");
    identical(preset("fig5"), "fig5");

    ExperimentConfig fig2 = preset("fig2");
    fig2.trials = 200; // reduced: determinism is a per-trial property
    identical(fig2, "fig2");

    ExperimentConfig fig4 = preset("fig4");
    fig4.trials = 5;
    fig4.sweep_values = {0.2, 0.4};
    fig4.grids.willie_draws = 100;
    fig4.grids.outage_draws = 200;
    fig4.grids.power_points = 10;
    identical(fig4, "fig4");
    return o;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"1 fig2 secrecy trends", criterion1},
        {"2 fig3 covertness probability trends", criterion2},
        {"3 fig4 amplitude trends", criterion3},
        {"4 fig5 EST trends", criterion4},
        {"5a secrecy optimizer vs brute force", criterion5a},
        {"5b covert optimizer vs exhaustive oracle", criterion5b},
        {"5c covertness predicate vs nulling oracle", criterion5c},
        {"6 analytic detector vs Monte-Carlo radiometer", criterion6},
        {"7 channel statistics normalization", criterion7},
        {"8 phase-quantization monotonicity", criterion8},
        {"9 preset determinism across thread counts", criterion9},
    };
    int failures = 0;
    for (const auto& e : entries) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o.ok = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        std::printf("criterion %s: %s (%.1fs)%s%s\n", e.name,
                    o.ok ? "PASS" : "FAIL", secs, o.detail.empty() ? "" : " - ",
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.ok)
            ++failures;
    }
    return failures;
}
