#include "irsbf/experiment.hpp"

#include "irsbf/channel.hpp"
#include "irsbf/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace irsbf {

namespace {

constexpr std::uint64_t kChannelStream = 0;
constexpr std::uint64_t kNoiseStreamBase = 1;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

struct TrialChannels {
    GeometricChannel h; // BS -> IRS, N x M
    GeometricChannel g; // IRS -> UE, K x N
};

TrialChannels draw_trial_channels(const ExperimentConfig& cfg, long trial) {
    Rng rng = Rng::substream(cfg.seed, kChannelStream, static_cast<std::uint64_t>(trial));
    const auto paths_h = draw_paths(cfg.paths, cfg.elev_spread_deg, cfg.az_min_deg, cfg.az_max_deg,
                                    GainLaw{cfg.gain_var_h()}, rng);
    const auto paths_g = draw_paths(cfg.paths, cfg.elev_spread_deg, cfg.az_min_deg, cfg.az_max_deg,
                                    GainLaw{cfg.gain_var_g()}, rng);
    TrialChannels ch;
    ch.h = synth_channel(paths_h, {cfg.m_y, cfg.m_z}, {cfg.n_y, cfg.n_z});
    ch.g = synth_channel(paths_g, {cfg.n_y, cfg.n_z}, {cfg.k_y, cfg.k_z});
    return ch;
}

BeamformingSolution design_from_factors(Method method, const ExperimentConfig& cfg,
                                        const CMat& h_y, const CMat& h_z, const CMat& g_y,
                                        const CMat& g_z) {
    if (method == Method::kf)
        return kf_design(h_y, h_z, g_y, g_z);
    const Tensor3 f_y = fold_to_tensor(combined_channel(h_y, g_y), cfg.k_y, cfg.m_y, cfg.n_y);
    const Tensor3 f_z = fold_to_tensor(combined_channel(h_z, g_z), cfg.k_z, cfg.m_z, cfg.n_z);
    return tot_design(f_y, f_z);
}

ComplexityDims trial_dims(const ExperimentConfig& cfg) {
    return {cfg.m_y, cfg.m_z, cfg.k_y, cfg.k_z, static_cast<double>(cfg.n_y),
            static_cast<double>(cfg.n_z)};
}

void parallel_for_trials(long trials, int threads, const std::function<void(long)>& body);

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

void parallel_for_trials(long trials, int threads, const std::function<void(long)>& body) {
    if (threads <= 1 || trials <= 1) {
        for (long t = 0; t < trials; ++t)
            body(t);
        return;
    }
    const int workers = static_cast<int>(std::min<long>(threads, trials));
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (long t = w; t < trials; t += workers)
                    body(t);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace

std::vector<TrialRecord> run_se_vs_snr(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t per_trial = cfg.methods.size() * cfg.snr_db.size();
    std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials) * per_trial);

    std::vector<long long> complexity(cfg.methods.size());
    for (std::size_t i = 0; i < cfg.methods.size(); ++i)
        complexity[i] = complexity_count(cfg.methods[i], trial_dims(cfg)).op_count();

    parallel_for_trials(cfg.trials, cfg.threads, [&](long trial) {
        const TrialChannels ch = draw_trial_channels(cfg, trial);
        for (std::size_t i = 0; i < cfg.methods.size(); ++i) {
            const Method method = cfg.methods[i];
            const BeamformingSolution sol =
                method == Method::baseline
                    ? baseline_full(ch.h.full, ch.g.full)
                    : design_from_factors(method, cfg, ch.h.approx_y, ch.h.approx_z,
                                          ch.g.approx_y, ch.g.approx_z);
            const Complex gain = effective_gain(sol, ch.h.full, ch.g.full);
            for (std::size_t j = 0; j < cfg.snr_db.size(); ++j) {
                TrialRecord& rec =
                    records[(static_cast<std::size_t>(trial) * cfg.methods.size() + i) *
                                cfg.snr_db.size() +
                            j];
                rec.method_tag = method_name(method);
                rec.snr_db = cfg.snr_db[j];
                rec.delta_deg = cfg.elev_spread_deg;
                rec.trial = trial;
                rec.se_bits = spectral_efficiency(gain, {1.0, db_to_linear(-cfg.snr_db[j])});
                rec.complexity = complexity[i];
                rec.seed = cfg.seed;
            }
        }
    });
    return records;
}

std::vector<ComplexityRow> run_complexity_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<IrsSplit> grid = cfg.n_grid;
    if (grid.empty()) {
        for (double n : {100.0, 250.0, 500.0, 750.0, 1000.0})
            grid.push_back({n, std::sqrt(n), std::sqrt(n), false});
    }
    std::vector<ComplexityRow> rows;
    rows.reserve(grid.size() * cfg.methods.size());
    for (const IrsSplit& split : grid) {
        for (Method method : cfg.methods) {
            const ComplexityDims dims{cfg.m_y, cfg.m_z, cfg.k_y, cfg.k_z, split.n_y, split.n_z};
            rows.push_back({method_name(method), split.n, split.n_y, split.n_z,
                            complexity_count(method, dims).ops, cfg.seed});
        }
    }
    return rows;
}

std::vector<TrialRecord> run_imperfect_csi(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t method_rows = cfg.methods.size() + 1; // + perfect-CSI reference
    const std::size_t per_trial = cfg.sigma_z_db.size() * method_rows;
    std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials) * per_trial);

    const LinkBudget budget{1.0, db_to_linear(-cfg.imperfect_snr_db)};
    const DomainDims dd{cfg.k_y, cfg.k_z, cfg.m_y, cfg.m_z, cfg.n_y, cfg.n_z};

    std::vector<long long> complexity(cfg.methods.size());
    for (std::size_t i = 0; i < cfg.methods.size(); ++i)
        complexity[i] = complexity_count(cfg.methods[i], trial_dims(cfg)).op_count();
    const long long baseline_complexity = complexity_count(Method::baseline, trial_dims(cfg)).op_count();

    parallel_for_trials(cfg.trials, cfg.threads, [&](long trial) {
        const TrialChannels ch = draw_trial_channels(cfg, trial);
        const CMat f = combined_channel(ch.h.full, ch.g.full);
        const double perfect_se =
            spectral_efficiency(effective_gain(baseline_full(ch.h.full, ch.g.full), ch.h.full, ch.g.full),
                                budget);

        for (std::size_t zi = 0; zi < cfg.sigma_z_db.size(); ++zi) {
            const double sigma_db = cfg.sigma_z_db[zi];
            Rng noise_rng = Rng::substream(cfg.seed, kNoiseStreamBase + zi,
                                           static_cast<std::uint64_t>(trial));
            const CMat f_hat = add_estimation_noise(f, db_to_linear(sigma_db), noise_rng);

            // The SVD-based factorization paths share the LSKRF step.
            KhatriRaoFactors krf;
            const bool needs_krf =
                std::find_if(cfg.methods.begin(), cfg.methods.end(), [](Method m) {
                    return m != Method::tot;
                }) != cfg.methods.end();
            if (needs_krf)
                krf = lskrf(f_hat, cfg.k(), cfg.m());

            const std::size_t base = (static_cast<std::size_t>(trial) * cfg.sigma_z_db.size() + zi) *
                                     method_rows;
            for (std::size_t i = 0; i < cfg.methods.size(); ++i) {
                const Method method = cfg.methods[i];
                BeamformingSolution sol;
                switch (method) {
                case Method::baseline:
                    sol = baseline_full(krf.h, krf.g);
                    break;
                case Method::kf: {
                    const auto [h_y, h_z] = nearest_kron_factor(krf.h, {cfg.n_y, cfg.m_y},
                                                                {cfg.n_z, cfg.m_z});
                    const auto [g_y, g_z] = nearest_kron_factor(krf.g, {cfg.k_y, cfg.n_y},
                                                                {cfg.k_z, cfg.n_z});
                    sol = kf_design(h_y, h_z, g_y, g_z);
                    break;
                }
                case Method::tot: {
                    const auto [f_y, f_z] = extract_domain_combined(f_hat, dd);
                    sol = tot_design(fold_to_tensor(f_y, cfg.k_y, cfg.m_y, cfg.n_y),
                                     fold_to_tensor(f_z, cfg.k_z, cfg.m_z, cfg.n_z));
                    break;
                }
                }
                TrialRecord& rec = records[base + i];
                rec.method_tag = method_name(method);
                rec.snr_db = cfg.imperfect_snr_db;
                rec.sigma_z_db = sigma_db;
                rec.delta_deg = cfg.elev_spread_deg;
                rec.trial = trial;
                rec.se_bits =
                    spectral_efficiency(effective_gain(sol, ch.h.full, ch.g.full), budget);
                rec.complexity = complexity[i];
                rec.seed = cfg.seed;
            }

            TrialRecord& ref = records[base + cfg.methods.size()];
            ref.method_tag = "baseline-perfect";
            ref.snr_db = cfg.imperfect_snr_db;
            ref.sigma_z_db = sigma_db;
            ref.delta_deg = cfg.elev_spread_deg;
            ref.trial = trial;
            ref.se_bits = perfect_se;
            ref.complexity = baseline_complexity;
            ref.seed = cfg.seed;
        }
    });
    return records;
}

std::string csv_text(const std::vector<TrialRecord>& records) {
    std::string out = "method,snr_db,sigma_z_db,delta_deg,trial,se_bits,complexity,seed\n";
    for (const TrialRecord& r : records) {
        out += r.method_tag;
        out += ',';
        out += fmt_g(r.snr_db);
        out += ',';
        if (r.sigma_z_db)
            out += fmt_g(*r.sigma_z_db);
        out += ',';
        out += fmt_g(r.delta_deg);
        out += ',';
        out += std::to_string(r.trial);
        out += ',';
        out += fmt_full(r.se_bits);
        out += ',';
        out += std::to_string(r.complexity);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

std::string csv_text(const std::vector<ComplexityRow>& rows) {
    std::string out = "method,n,n_y,n_z,complexity,seed\n";
    for (const ComplexityRow& r : rows) {
        out += r.method_tag;
        out += ',';
        out += fmt_g(r.n);
        out += ',';
        out += fmt_full(r.n_y);
        out += ',';
        out += fmt_full(r.n_z);
        out += ',';
        out += fmt_full(r.ops);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path) {
    write_file(path, csv_text(records));
}

void emit_csv(const std::vector<ComplexityRow>& rows, const std::string& path) {
    write_file(path, csv_text(rows));
}

std::vector<TrialRecord> parse_trial_csv(const std::string& text) {
    std::vector<TrialRecord> records;
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line))
        throw std::invalid_argument("csv: empty input");
    if (line != "method,snr_db,sigma_z_db,delta_deg,trial,se_bits,complexity,seed")
        throw std::invalid_argument("csv: unexpected header: " + line);
    while (std::getline(ss, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ','))
            fields.push_back(field);
        if (fields.size() == 7)
            fields.push_back(""); // trailing empty field
        if (fields.size() != 8)
            throw std::invalid_argument("csv: bad row: " + line);
        TrialRecord r;
        r.method_tag = fields[0];
        r.snr_db = std::stod(fields[1]);
        if (!fields[2].empty())
            r.sigma_z_db = std::stod(fields[2]);
        r.delta_deg = std::stod(fields[3]);
        r.trial = std::stol(fields[4]);
        r.se_bits = std::stod(fields[5]);
        r.complexity = std::stoll(fields[6]);
        r.seed = std::stoull(fields[7]);
        records.push_back(std::move(r));
    }
    return records;
}

void emit_plot_script(PlotKind kind, const std::string& csv_path, const std::string& script_path) {
    const char* x_col = kind == PlotKind::complexity ? "n"
                        : kind == PlotKind::imperfect_csi ? "sigma_z_db"
                                                          : "snr_db";
    const char* y_col = kind == PlotKind::complexity ? "complexity" : "se_bits";
    const char* y_label = kind == PlotKind::complexity ? "operations" : "SE [bit/s/Hz]";

    std::ostringstream out;
    out << "#!/usr/bin/env python3\n"
        << "import csv\n"
        << "from collections import defaultdict\n"
        << "import matplotlib\n"
        << "matplotlib.use('Agg')\n"
        << "import matplotlib.pyplot as plt\n\n"
        << "points = defaultdict(lambda: defaultdict(list))\n"
        << "with open(" << '"' << csv_path << '"' << ") as fh:\n"
        << "    for row in csv.DictReader(fh):\n"
        << "        points[row['method']][float(row['" << x_col << "'])].append(float(row['"
        << y_col << "']))\n\n"
        << "fig, ax = plt.subplots()\n"
        << "for method, series in sorted(points.items()):\n"
        << "    xs = sorted(series)\n"
        << "    ys = [sum(series[x]) / len(series[x]) for x in xs]\n"
        << "    ax.plot(xs, ys, marker='o', label=method)\n"
        << "ax.set_xlabel('" << x_col << "')\n"
        << "ax.set_ylabel('" << y_label << "')\n";
    if (kind == PlotKind::complexity)
        out << "ax.set_yscale('log')\n";
    out << "ax.grid(True)\n"
        << "ax.legend()\n"
        << "fig.savefig(" << '"' << csv_path << ".png" << '"' << ", dpi=150)\n";
    write_file(script_path, out.str());
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records) {
    struct Acc {
        double sum = 0.0, sum_sq = 0.0;
        long count = 0;
        std::size_t order = 0;
    };
    std::map<std::tuple<std::string, double, double, bool>, Acc> acc;
    std::size_t next_order = 0;
    for (const TrialRecord& r : records) {
        const auto key = std::make_tuple(r.method_tag, r.snr_db, r.sigma_z_db.value_or(0.0),
                                         r.sigma_z_db.has_value());
        Acc& a = acc.try_emplace(key, Acc{0.0, 0.0, 0, next_order}).first->second;
        if (a.count == 0)
            a.order = next_order++;
        a.sum += r.se_bits;
        a.sum_sq += r.se_bits * r.se_bits;
        ++a.count;
    }
    std::vector<SummaryRow> rows(acc.size());
    for (const auto& [key, a] : acc) {
        SummaryRow& row = rows[a.order];
        row.method_tag = std::get<0>(key);
        row.snr_db = std::get<1>(key);
        if (std::get<3>(key))
            row.sigma_z_db = std::get<2>(key);
        row.count = a.count;
        row.mean_se = a.sum / a.count;
        const double var =
            a.count > 1 ? std::max(0.0, (a.sum_sq - a.sum * a.sum / a.count) / (a.count - 1)) : 0.0;
        row.std_error = a.count > 1 ? std::sqrt(var / a.count) : 0.0;
    }
    return rows;
}

std::string format_summary(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "method            snr_db  sigma_z_db      mean_se    std_err  trials\n";
    for (const SummaryRow& r : rows) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-16s %7g  %10s  %11.4f  %9.4f  %6ld\n",
                      r.method_tag.c_str(), r.snr_db,
                      r.sigma_z_db ? fmt_g(*r.sigma_z_db).c_str() : "-", r.mean_se, r.std_error,
                      r.count);
        out << buf;
    }
    return out.str();
}

} // namespace irsbf
