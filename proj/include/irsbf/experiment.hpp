#pragma once

#include "irsbf/config.hpp"
#include "irsbf/metrics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace irsbf {

// One Monte-Carlo outcome. method_tag is "baseline", "kf", "tot" or
// "baseline-perfect" (the perfect-CSI reference in the imperfect-CSI run).
struct TrialRecord {
    std::string method_tag;
    double snr_db = 0.0;
    std::optional<double> sigma_z_db;
    double delta_deg = 0.0;
    long trial = 0;
    double se_bits = 0.0;
    long long complexity = 0;
    std::uint64_t seed = 0;
};

struct ComplexityRow {
    std::string method_tag;
    double n = 0.0;
    double n_y = 0.0;
    double n_z = 0.0;
    double ops = 0.0;
    std::uint64_t seed = 0;
};

// Spectral efficiency vs SNR (the designers see the factorized channel
// approximation, the SE is measured on the true channel).
std::vector<TrialRecord> run_se_vs_snr(const ExperimentConfig& cfg);

// Operation-count model per method over the configured IRS sizes.
std::vector<ComplexityRow> run_complexity_sweep(const ExperimentConfig& cfg);

// Designs built from a noisy combined-channel estimate, measured on the true
// channel at the fixed SNR; includes the perfect-CSI baseline reference.
std::vector<TrialRecord> run_imperfect_csi(const ExperimentConfig& cfg);

// CSV emission. Trial tables use the header
//   method,snr_db,sigma_z_db,delta_deg,trial,se_bits,complexity,seed
// and complexity tables use
//   method,n,n_y,n_z,complexity,seed
// Emission is byte-deterministic for a fixed table.
void emit_csv(const std::vector<TrialRecord>& records, const std::string& path);
void emit_csv(const std::vector<ComplexityRow>& rows, const std::string& path);
std::string csv_text(const std::vector<TrialRecord>& records);
std::string csv_text(const std::vector<ComplexityRow>& rows);
std::vector<TrialRecord> parse_trial_csv(const std::string& text);

enum class PlotKind { se_vs_snr, complexity, imperfect_csi };
// Small matplotlib script that reads the CSV at csv_path.
void emit_plot_script(PlotKind kind, const std::string& csv_path, const std::string& script_path);

// Mean and sample standard error per (method, grid point).
struct SummaryRow {
    std::string method_tag;
    double snr_db = 0.0;
    std::optional<double> sigma_z_db;
    double mean_se = 0.0;
    double std_error = 0.0;
    long count = 0;
};

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records);
std::string format_summary(const std::vector<SummaryRow>& rows);

} // namespace irsbf
