#include "irsbf/experiment.hpp"
#include "irsbf/kernels.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

struct CliOverrides {
    std::string config_path;
    std::optional<long> seed;
    std::optional<long> trials;
    std::optional<double> delta_deg;
    std::optional<std::string> out;
    std::optional<int> threads;
    std::string plot_script;
};

void add_common(CLI::App* cmd, CliOverrides& o) {
    cmd->add_option("--config", o.config_path, "Configuration file (key = value lines)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "Override the RNG seed");
    cmd->add_option("--trials", o.trials, "Override the Monte-Carlo trial count");
    cmd->add_option("--delta-deg", o.delta_deg, "Override the elevation spread (degrees)");
    cmd->add_option("--out", o.out, "Override the output CSV path");
    cmd->add_option("--threads", o.threads, "Override the worker thread count");
    cmd->add_option("--plot-script", o.plot_script,
                    "Also write a matplotlib script reading the CSV");
}

irsbf::ExperimentConfig build_config(const CliOverrides& o) {
    irsbf::ExperimentConfig cfg =
        o.config_path.empty() ? irsbf::default_config() : irsbf::load_config(o.config_path);
    if (o.seed)
        cfg.seed = static_cast<std::uint64_t>(*o.seed);
    if (o.trials)
        cfg.trials = *o.trials;
    if (o.delta_deg)
        cfg.elev_spread_deg = *o.delta_deg;
    if (o.out)
        cfg.out = *o.out;
    if (o.threads)
        cfg.threads = *o.threads;
    cfg.validate();
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"IRS-assisted MIMO link simulator: factorized active/passive beamforming"};
    app.require_subcommand(1);

    CliOverrides se_opts, cx_opts, csi_opts;
    CLI::App* se = app.add_subcommand("se-sweep", "Spectral efficiency vs SNR (Monte-Carlo)");
    add_common(se, se_opts);
    CLI::App* cx = app.add_subcommand("complexity", "Operation-count model vs IRS size");
    add_common(cx, cx_opts);
    CLI::App* csi =
        app.add_subcommand("imperfect-csi", "Spectral efficiency vs channel-estimation noise");
    add_common(csi, csi_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (se->parsed()) {
            const auto cfg = build_config(se_opts);
            std::cout << "kernel backend: "
                      << irsbf::kernels::backend_name(irsbf::kernels::active_backend()) << "\n";
            const auto records = irsbf::run_se_vs_snr(cfg);
            irsbf::emit_csv(records, cfg.out);
            std::cout << irsbf::format_summary(irsbf::summarize(records));
            std::cout << "wrote " << records.size() << " records to " << cfg.out << "\n";
            if (!se_opts.plot_script.empty())
                irsbf::emit_plot_script(irsbf::PlotKind::se_vs_snr, cfg.out, se_opts.plot_script);
        } else if (cx->parsed()) {
            const auto cfg = build_config(cx_opts);
            const auto rows = irsbf::run_complexity_sweep(cfg);
            irsbf::emit_csv(rows, cfg.out);
            for (const auto& r : rows)
                std::cout << r.method_tag << " n=" << r.n << " ops=" << r.ops << "\n";
            std::cout << "wrote " << rows.size() << " rows to " << cfg.out << "\n";
            if (!cx_opts.plot_script.empty())
                irsbf::emit_plot_script(irsbf::PlotKind::complexity, cfg.out, cx_opts.plot_script);
        } else if (csi->parsed()) {
            const auto cfg = build_config(csi_opts);
            std::cout << "kernel backend: "
                      << irsbf::kernels::backend_name(irsbf::kernels::active_backend()) << "\n";
            const auto records = irsbf::run_imperfect_csi(cfg);
            irsbf::emit_csv(records, cfg.out);
            std::cout << irsbf::format_summary(irsbf::summarize(records));
            std::cout << "wrote " << records.size() << " records to " << cfg.out << "\n";
            if (!csi_opts.plot_script.empty())
                irsbf::emit_plot_script(irsbf::PlotKind::imperfect_csi, cfg.out,
                                        csi_opts.plot_script);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
