// hopfield_junction.cpp — command-line front end

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfield/config.hpp"
#include "hopfield/oracle/verify.hpp"
#include "hopfield/sweep.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::string preset;
    std::string output = "-";
    int threads = 0;
    bool no_provenance = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "flat key = value configuration file");
    cmd->add_option("--set", args.sets, "override a single key (key=value, repeatable)");
    cmd->add_option("--preset", args.preset,
                    "figure preset: fig2, fig3-resonant, fig3-offres, fig4-resonant, "
                    "fig4-offres");
    cmd->add_option("--output", args.output, "output path, or - for stdout");
    cmd->add_option("--threads", args.threads, "worker threads for sweeps");
    cmd->add_flag("--no-provenance-line", args.no_provenance,
                  "omit the generated_by header line");
}

hopfield::SweepConfig assemble(const CommonArgs& args) {
    hopfield::ConfigMap map;
    if (!args.config_path.empty()) map = hopfield::ConfigMap::from_file(args.config_path);
    for (const auto& kv : args.sets) map.set(kv);
    hopfield::SweepConfig cfg =
        args.preset.empty()
            ? hopfield::make_sweep_config(map)
            : hopfield::make_sweep_config(map, hopfield::preset_config(args.preset));
    if (args.threads > 0) cfg.threads = args.threads;
    if (args.no_provenance) cfg.provenance_line = false;
    return cfg;
}

void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hopfield::ConfigError("cannot open output file '" + path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heat transport through a two-mode light-matter junction"};
    app.require_subcommand(1);

    CommonArgs sweep_args, point_args, verify_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "sweep the coupling g and emit CSV data");
    add_common(sweep_cmd, sweep_args);
    CLI::App* point_cmd =
        app.add_subcommand("point", "full report at a single coupling (key 'g')");
    add_common(point_cmd, point_args);
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the brute-force verification harness");
    add_common(verify_cmd, verify_args);
    CLI::App* presets_cmd = app.add_subcommand("presets", "list the figure presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sweep_cmd->parsed()) {
            const hopfield::SweepConfig cfg = assemble(sweep_args);
            emit(sweep_args.output, hopfield::run_sweep(cfg));
        } else if (point_cmd->parsed()) {
            const hopfield::SweepConfig cfg = assemble(point_args);
            emit(point_args.output, hopfield::point_report(cfg.scenario));
        } else if (verify_cmd->parsed()) {
            const hopfield::SweepConfig cfg = assemble(verify_args);
            const hopfield::oracle::VerificationReport report =
                hopfield::oracle::verify_all(cfg.scenario, cfg.verify);
            emit(verify_args.output, report.to_text());
            return report.all_passed() ? 0 : 3;
        } else if (presets_cmd->parsed()) {
            for (const auto& name : hopfield::preset_names())
                std::cout << hopfield::preset_summary(name) << "\n";
        }
    } catch (const hopfield::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const hopfield::DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        // Convergence, resource, step-size or numerical failures.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
