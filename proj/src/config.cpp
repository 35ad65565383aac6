#include "irsbf/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace irsbf {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double d = 0.0;
    try {
        d = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for '" + key + "': " + value);
    }
    if (pos != value.size())
        throw std::invalid_argument("config: bad number for '" + key + "': " + value);
    return d;
}

long parse_long(const std::string& key, const std::string& value) {
    const double d = parse_double(key, value);
    if (d != std::floor(d))
        throw std::invalid_argument("config: expected integer for '" + key + "': " + value);
    return static_cast<long>(d);
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const std::string& tok : split(value, ','))
        out.push_back(parse_double(key, tok));
    return out;
}

Method parse_method(const std::string& name) {
    if (name == "baseline")
        return Method::baseline;
    if (name == "kf")
        return Method::kf;
    if (name == "tot")
        return Method::tot;
    throw std::invalid_argument("config: unknown method '" + name + "'");
}

} // namespace

IrsSplit parse_irs_split(const std::string& token) {
    IrsSplit s;
    const auto x = token.find('x');
    if (x == std::string::npos) {
        s.n = parse_double("n_grid", token);
        s.n_y = s.n_z = std::sqrt(s.n);
        s.explicit_split = false;
    } else {
        s.n_y = parse_double("n_grid", token.substr(0, x));
        s.n_z = parse_double("n_grid", token.substr(x + 1));
        s.n = s.n_y * s.n_z;
        s.explicit_split = true;
    }
    if (s.n <= 0.0)
        throw std::invalid_argument("config: n_grid entries must be positive");
    return s;
}

void apply_key_value(ExperimentConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    if (key == "m_y") cfg.m_y = static_cast<int>(parse_long(key, value));
    else if (key == "m_z") cfg.m_z = static_cast<int>(parse_long(key, value));
    else if (key == "k_y") cfg.k_y = static_cast<int>(parse_long(key, value));
    else if (key == "k_z") cfg.k_z = static_cast<int>(parse_long(key, value));
    else if (key == "n_y") cfg.n_y = static_cast<int>(parse_long(key, value));
    else if (key == "n_z") cfg.n_z = static_cast<int>(parse_long(key, value));
    else if (key == "paths") cfg.paths = static_cast<int>(parse_long(key, value));
    else if (key == "elev_spread_deg") cfg.elev_spread_deg = parse_double(key, value);
    else if (key == "az_min_deg") cfg.az_min_deg = parse_double(key, value);
    else if (key == "az_max_deg") cfg.az_max_deg = parse_double(key, value);
    else if (key == "gain_variance_h")
        cfg.gain_variance_h = value == "auto" ? std::nullopt : std::optional(parse_double(key, value));
    else if (key == "gain_variance_g")
        cfg.gain_variance_g = value == "auto" ? std::nullopt : std::optional(parse_double(key, value));
    else if (key == "snr_db") cfg.snr_db = parse_list(key, value);
    else if (key == "imperfect_snr_db") cfg.imperfect_snr_db = parse_double(key, value);
    else if (key == "sigma_z_db") cfg.sigma_z_db = parse_list(key, value);
    else if (key == "n_grid") {
        cfg.n_grid.clear();
        for (const std::string& tok : split(value, ','))
            cfg.n_grid.push_back(parse_irs_split(tok));
    } else if (key == "trials") cfg.trials = parse_long(key, value);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_long(key, value));
    else if (key == "methods") {
        cfg.methods.clear();
        for (const std::string& tok : split(value, ','))
            cfg.methods.push_back(parse_method(tok));
    } else if (key == "out") cfg.out = value;
    else if (key == "threads") cfg.threads = static_cast<int>(parse_long(key, value));
    else
        throw std::invalid_argument("config: unknown key '" + key + "'");
}

ExperimentConfig default_config() { return {}; }

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open " + path);

    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: " + path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        apply_key_value(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

void ExperimentConfig::validate() const {
    if (m_y < 1 || m_z < 1 || k_y < 1 || k_z < 1 || n_y < 1 || n_z < 1)
        throw std::invalid_argument("config: array dimensions must be positive");
    if (paths < 1)
        throw std::invalid_argument("config: paths must be >= 1");
    if (elev_spread_deg < 0.0)
        throw std::invalid_argument("config: elev_spread_deg must be >= 0");
    if (az_min_deg > az_max_deg)
        throw std::invalid_argument("config: empty azimuth range");
    if (gain_var_h() < 0.0 || gain_var_g() < 0.0)
        throw std::invalid_argument("config: gain variances must be >= 0");
    if (snr_db.empty() || sigma_z_db.empty())
        throw std::invalid_argument("config: grids must be nonempty");
    if (trials < 1)
        throw std::invalid_argument("config: trials must be >= 1");
    if (methods.empty())
        throw std::invalid_argument("config: methods must be nonempty");
    if (threads < 1)
        throw std::invalid_argument("config: threads must be >= 1");
}

} // namespace irsbf
