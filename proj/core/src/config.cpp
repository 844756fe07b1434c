#include "seclab/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace seclab {

std::string to_string(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::secrecy_curve: return "secrecy-curve";
    case ExperimentKind::covert_prob: return "covert-prob";
    case ExperimentKind::covert_amplitudes: return "covert-amplitudes";
    case ExperimentKind::est_rho: return "est-rho";
    }
    return "?";
}

namespace {

struct RawValue {
    std::string text;
    int line = 0;
};

using RawMap = std::map<std::string, RawValue>;

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "kind",
        "scenario.alice", "scenario.bob", "scenario.eve", "scenario.willie",
        "scenario.irs", "scenario.irs_candidates",
        "scenario.n_elements", "scenario.k_factor_db",
        "scenario.tx_power_w", "scenario.noise_power_w",
        "scenario.path_loss.exponent_direct",
        "scenario.path_loss.exponent_irs",
        "scenario.path_loss.ref_gain_db",
        "scenario.los_wavelength_m",
        "sweep.variable", "sweep.values",
        "montecarlo.trials", "montecarlo.root_seed",
        "covert.epsilon", "covert.blocklength", "covert.target_rate_bits",
        "grids.beta_levels", "grids.theta_points",
        "grids.power_min_w", "grids.power_max_w", "grids.power_points",
        "grids.willie_draws", "grids.outage_draws", "grids.residual_rho",
        "grids.search", "grids.coordinate_sweeps",
        "rates.r_b_bits", "rates.r_s_bits",
        "csi.eve_csi_public",
        "optimizer.restarts", "optimizer.grid_points",
        "optimizer.tol_bits", "optimizer.phase_bits",
    };
    return keys;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

RawMap tokenize(const std::string& text) {
    RawMap map;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        const std::string t = trim(line);
        if (t.empty())
            continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error("parse error at line " + std::to_string(lineno) +
                               ": expected 'key = value'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error("parse error at line " + std::to_string(lineno) +
                               ", column " + std::to_string(eq + 1) +
                               ": empty key or value");
        if (!known_keys().count(key))
            throw config_error("unknown key '" + key + "' at line " +
                               std::to_string(lineno));
        if (map.count(key))
            throw config_error("duplicate key '" + key + "' at line " +
                               std::to_string(lineno));
        map[key] = {value, lineno};
    }
    return map;
}

double parse_number(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size() || !std::isfinite(v))
            throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw config_error("field '" + key + "': not a number: '" + text + "'");
    }
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw config_error("field '" + key + "': expected [v1, v2, ...]");
    std::vector<double> out;
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        const std::string t = trim(item);
        if (t.empty())
            throw config_error("field '" + key + "': empty list element");
        out.push_back(parse_number(key, t));
    }
    return out;
}

Position parse_position(const std::string& key, const std::string& text) {
    const auto v = parse_list(key, text);
    if (v.size() != 2)
        throw config_error("field '" + key + "': expected [x, y]");
    return {v[0], v[1]};
}

class Reader {
public:
    explicit Reader(RawMap map) : map_(std::move(map)) {}

    bool has(const std::string& key) const { return map_.count(key) != 0; }

    std::string str(const std::string& key, const std::string& fallback) {
        auto it = map_.find(key);
        return it == map_.end() ? fallback : it->second.text;
    }
    double num(const std::string& key, double fallback) {
        auto it = map_.find(key);
        return it == map_.end() ? fallback
                                : parse_number(key, it->second.text);
    }
    std::vector<double> list(const std::string& key) {
        auto it = map_.find(key);
        if (it == map_.end())
            throw config_error("missing required field '" + key + "'");
        return parse_list(key, it->second.text);
    }
    Position position(const std::string& key) {
        auto it = map_.find(key);
        if (it == map_.end())
            throw config_error("missing required field '" + key + "'");
        return parse_position(key, it->second.text);
    }
    std::size_t count(const std::string& key, std::size_t fallback) {
        const double v = num(key, static_cast<double>(fallback));
        if (v < 0.0 || v != std::floor(v))
            throw config_error("field '" + key + "': expected a non-negative integer");
        return static_cast<std::size_t>(v);
    }

private:
    RawMap map_;
};

void append_kv(std::string& out, const std::string& key, const std::string& v) {
    out += key;
    out += '=';
    out += v;
    out += '\n';
}

std::string canon_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string canon_list(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += canon_num(v[i]);
    }
    s += ']';
    return s;
}

std::string canon_pos(const Position& p) {
    return canon_list({p.x, p.y});
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::string ExperimentConfig::canonical_text() const {
    // keys in sorted order; only semantically active fields contribute
    std::map<std::string, std::string> kv;
    kv["kind"] = to_string(kind);
    kv["scenario.alice"] = canon_pos(scenario.alice);
    kv["scenario.bob"] = canon_pos(scenario.bob);
    if (scenario.eve)
        kv["scenario.eve"] = canon_pos(*scenario.eve);
    if (scenario.willie)
        kv["scenario.willie"] = canon_pos(*scenario.willie);
    kv["scenario.irs"] = canon_pos(scenario.irs);
    if (!irs_candidates.empty()) {
        std::vector<double> flat;
        for (const auto& p : irs_candidates) {
            flat.push_back(p.x);
            flat.push_back(p.y);
        }
        kv["scenario.irs_candidates"] = canon_list(flat);
    }
    kv["scenario.n_elements"] = canon_num(static_cast<double>(scenario.n_elements));
    kv["scenario.k_factor_db"] = canon_num(scenario.rician.k_factor_db);
    kv["scenario.tx_power_w"] = canon_num(scenario.tx_power_w);
    kv["scenario.noise_power_w"] = canon_num(scenario.noise_power_w);
    kv["scenario.path_loss.exponent_direct"] =
        canon_num(scenario.path_loss.exponent_direct);
    kv["scenario.path_loss.exponent_irs"] =
        canon_num(scenario.path_loss.exponent_irs);
    kv["scenario.path_loss.ref_gain_db"] =
        canon_num(scenario.path_loss.ref_gain_db);
    kv["scenario.los_wavelength_m"] = canon_num(scenario.los_wavelength_m);
    kv["sweep.variable"] = sweep_variable;
    kv["sweep.values"] = canon_list(sweep_values);
    kv["montecarlo.trials"] = canon_num(static_cast<double>(trials));
    kv["montecarlo.root_seed"] = canon_num(static_cast<double>(root_seed));
    kv["covert.epsilon"] = canon_num(covert.epsilon);
    kv["covert.blocklength"] = canon_num(static_cast<double>(covert.blocklength));
    kv["covert.target_rate_bits"] = canon_num(target_rate_bits);
    kv["grids.beta_levels"] = canon_num(static_cast<double>(grids.beta_levels));
    kv["grids.theta_points"] = canon_num(static_cast<double>(grids.theta_points));
    kv["grids.power_min_w"] = canon_num(grids.power_min_w);
    kv["grids.power_max_w"] = canon_num(grids.power_max_w);
    kv["grids.power_points"] = canon_num(static_cast<double>(grids.power_points));
    kv["grids.willie_draws"] = canon_num(static_cast<double>(grids.willie_draws));
    kv["grids.outage_draws"] = canon_num(static_cast<double>(grids.outage_draws));
    kv["grids.residual_rho"] = canon_num(grids.residual_rho);
    kv["grids.search"] =
        grids.search == CovertGrids::Search::full        ? "full"
        : grids.search == CovertGrids::Search::coordinate ? "coordinate"
                                                          : "auto";
    kv["grids.coordinate_sweeps"] =
        canon_num(static_cast<double>(grids.coordinate_sweeps));
    kv["rates.r_b_bits"] = canon_num(est.r_b_bits);
    kv["rates.r_s_bits"] = canon_num(est.r_s_bits);
    kv["csi.eve_csi_public"] = est.eve_csi_public ? "1" : "0";
    kv["optimizer.restarts"] = canon_num(optimizer.restarts);
    kv["optimizer.grid_points"] = canon_num(optimizer.grid_points);
    kv["optimizer.tol_bits"] = canon_num(optimizer.tol_bits);
    if (optimizer.phase_bits)
        kv["optimizer.phase_bits"] = canon_num(*optimizer.phase_bits);

    std::string out;
    for (const auto& [k, v] : kv)
        append_kv(out, k, v);
    return out;
}

std::string ExperimentConfig::digest() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(canonical_text())));
    return buf;
}

ExperimentConfig parse_config(const std::string& text) {
    Reader r(tokenize(text));
    ExperimentConfig cfg;

    const std::string kind = r.str("kind", "");
    if (kind == "secrecy-curve")
        cfg.kind = ExperimentKind::secrecy_curve;
    else if (kind == "covert-prob")
        cfg.kind = ExperimentKind::covert_prob;
    else if (kind == "covert-amplitudes")
        cfg.kind = ExperimentKind::covert_amplitudes;
    else if (kind == "est-rho")
        cfg.kind = ExperimentKind::est_rho;
    else if (kind.empty())
        throw config_error("missing required field 'kind'");
    else
        throw config_error("field 'kind': unknown experiment kind '" + kind + "'");

    cfg.scenario.alice = r.position("scenario.alice");
    cfg.scenario.bob = r.position("scenario.bob");
    if (r.has("scenario.eve"))
        cfg.scenario.eve = r.position("scenario.eve");
    if (r.has("scenario.willie"))
        cfg.scenario.willie = r.position("scenario.willie");
    if (r.has("scenario.irs"))
        cfg.scenario.irs = r.position("scenario.irs");
    if (r.has("scenario.irs_candidates")) {
        const auto flat = r.list("scenario.irs_candidates");
        if (flat.empty() || flat.size() % 2 != 0)
            throw config_error(
                "field 'scenario.irs_candidates': expected [x1,y1, x2,y2, ...]");
        for (std::size_t i = 0; i < flat.size(); i += 2)
            cfg.irs_candidates.push_back({flat[i], flat[i + 1]});
    }
    cfg.scenario.n_elements = r.count("scenario.n_elements", 0);
    cfg.scenario.rician.k_factor_db = r.num("scenario.k_factor_db", 0.0);
    cfg.scenario.tx_power_w = r.num("scenario.tx_power_w", 1.0);
    cfg.scenario.noise_power_w = r.num("scenario.noise_power_w", 1e-12);
    cfg.scenario.path_loss.exponent_direct =
        r.num("scenario.path_loss.exponent_direct", 3.5);
    cfg.scenario.path_loss.exponent_irs =
        r.num("scenario.path_loss.exponent_irs", 2.2);
    cfg.scenario.path_loss.ref_gain_db =
        r.num("scenario.path_loss.ref_gain_db", -30.0);
    cfg.scenario.los_wavelength_m = r.num("scenario.los_wavelength_m", 0.1);

    cfg.sweep_variable = r.str("sweep.variable", "");
    if (cfg.sweep_variable.empty())
        throw config_error("missing required field 'sweep.variable'");
    cfg.sweep_values = r.list("sweep.values");
    if (cfg.sweep_values.empty())
        throw config_error("field 'sweep.values': must be non-empty");

    cfg.trials = r.count("montecarlo.trials", 1);
    if (cfg.trials < 1)
        throw config_error("field 'montecarlo.trials': must be >= 1");
    cfg.root_seed = r.count("montecarlo.root_seed", 1);

    cfg.covert.epsilon = r.num("covert.epsilon", 0.1);
    cfg.covert.blocklength =
        static_cast<std::int64_t>(r.count("covert.blocklength", 100));
    cfg.target_rate_bits = r.num("covert.target_rate_bits", 6.0);

    cfg.grids.beta_levels = r.count("grids.beta_levels", 11);
    cfg.grids.theta_points = r.count("grids.theta_points", 32);
    cfg.grids.power_min_w = r.num("grids.power_min_w", 1e-5);
    cfg.grids.power_max_w = r.num("grids.power_max_w", 1e-2);
    cfg.grids.power_points = r.count("grids.power_points", 16);
    cfg.grids.willie_draws = r.count("grids.willie_draws", 2000);
    cfg.grids.outage_draws = r.count("grids.outage_draws", 1000);
    cfg.grids.residual_rho = r.num("grids.residual_rho", 0.95);
    cfg.grids.coordinate_sweeps =
        static_cast<int>(r.count("grids.coordinate_sweeps", 3));
    const std::string search = r.str("grids.search", "auto");
    if (search == "auto")
        cfg.grids.search = CovertGrids::Search::automatic;
    else if (search == "full")
        cfg.grids.search = CovertGrids::Search::full;
    else if (search == "coordinate")
        cfg.grids.search = CovertGrids::Search::coordinate;
    else
        throw config_error("field 'grids.search': expected auto|full|coordinate");

    cfg.est.r_b_bits = r.num("rates.r_b_bits", 4.0);
    cfg.est.r_s_bits = r.num("rates.r_s_bits", 1.0);
    cfg.est.eve_csi_public = r.count("csi.eve_csi_public", 0) != 0;

    cfg.optimizer.restarts = static_cast<int>(r.count("optimizer.restarts", 8));
    cfg.optimizer.grid_points =
        static_cast<int>(r.count("optimizer.grid_points", 256));
    cfg.optimizer.tol_bits = r.num("optimizer.tol_bits", 1e-6);
    if (r.has("optimizer.phase_bits"))
        cfg.optimizer.phase_bits =
            static_cast<int>(r.count("optimizer.phase_bits", 0));

    // kind-specific validation
    auto require_sweep = [&](const std::string& var) {
        if (cfg.sweep_variable != var)
            throw config_error("field 'sweep.variable': kind '" +
                               to_string(cfg.kind) + "' sweeps '" + var + "'");
    };
    switch (cfg.kind) {
    case ExperimentKind::secrecy_curve:
        if (!cfg.scenario.eve)
            throw config_error("validation: kind 'secrecy-curve' requires "
                               "'scenario.eve'");
        require_sweep("n_elements");
        break;
    case ExperimentKind::covert_prob:
        if (!cfg.scenario.willie)
            throw config_error("validation: kind 'covert-prob' requires "
                               "'scenario.willie'");
        if (cfg.irs_candidates.empty())
            throw config_error("validation: kind 'covert-prob' requires "
                               "'scenario.irs_candidates'");
        require_sweep("n_elements");
        break;
    case ExperimentKind::covert_amplitudes:
        if (!cfg.scenario.willie)
            throw config_error("validation: kind 'covert-amplitudes' requires "
                               "'scenario.willie'");
        require_sweep("epsilon");
        for (double e : cfg.sweep_values)
            if (!(e > 0.0 && e < 1.0))
                throw config_error("field 'sweep.values': epsilon must be in (0,1)");
        break;
    case ExperimentKind::est_rho:
        if (!cfg.scenario.eve)
            throw config_error("validation: kind 'est-rho' requires "
                               "'scenario.eve'");
        require_sweep("rho");
        for (double v : cfg.sweep_values)
            if (!(v >= 0.0 && v <= 1.0))
                throw config_error("field 'sweep.values': rho must be in [0,1]");
        if (!(cfg.est.r_s_bits > 0.0 && cfg.est.r_s_bits < cfg.est.r_b_bits))
            throw config_error("field 'rates.r_s_bits': need 0 < r_s < r_b");
        break;
    }
    if (cfg.sweep_variable != "n_elements" && cfg.sweep_variable != "epsilon" &&
        cfg.sweep_variable != "rho")
        throw config_error("field 'sweep.variable': unknown variable '" +
                           cfg.sweep_variable + "'");
    if (cfg.sweep_variable == "n_elements")
        for (double v : cfg.sweep_values)
            if (v < 0.0 || v != std::floor(v))
                throw config_error(
                    "field 'sweep.values': n_elements must be integers >= 0");
    try {
        cfg.scenario.validate();
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("validation: ") + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw config_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

} // namespace seclab
