#pragma once

#include "irsbf/beamforming.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace irsbf {

// One entry of the complexity sweep: either total N with N_y = N_z = sqrt(N),
// or an explicit "AxB" split.
struct IrsSplit {
    double n = 0.0;
    double n_y = 0.0;
    double n_z = 0.0;
    bool explicit_split = false;
};

struct ExperimentConfig {
    int m_y = 16, m_z = 8;   // base station array
    int k_y = 4, k_z = 4;    // user array
    int n_y = 10, n_z = 10;  // IRS panel
    int paths = 4;
    double elev_spread_deg = 2.5;
    double az_min_deg = -60.0;
    double az_max_deg = 60.0;
    // Per-path gain variance; unset means 1/N (IRS-aperture normalization).
    std::optional<double> gain_variance_h;
    std::optional<double> gain_variance_g;
    std::vector<double> snr_db = {0, 5, 10, 15, 20, 25, 30};
    double imperfect_snr_db = 20.0;
    std::vector<double> sigma_z_db = {-20, -17, -14, -11, -8, -5, -2};
    std::vector<IrsSplit> n_grid;
    long trials = 2000;
    std::uint64_t seed = 1;
    std::vector<Method> methods = {Method::baseline, Method::kf, Method::tot};
    std::string out = "results.csv";
    int threads = 1;

    int m() const { return m_y * m_z; }
    int k() const { return k_y * k_z; }
    int n() const { return n_y * n_z; }
    double gain_var_h() const { return gain_variance_h.value_or(1.0 / n()); }
    double gain_var_g() const { return gain_variance_g.value_or(1.0 / n()); }

    // Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

ExperimentConfig default_config();

// Flat "key = value" file, UTF-8, '#' comments; unknown keys are errors.
ExperimentConfig load_config(const std::string& path);
// Apply one "key=value" assignment (used for file lines and CLI overrides).
void apply_key_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

IrsSplit parse_irs_split(const std::string& token);

} // namespace irsbf
