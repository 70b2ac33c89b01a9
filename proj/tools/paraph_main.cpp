#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paraph/commands.hpp"
#include "paraph/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPipeline = 3;
constexpr int kExitIo = 4;

struct CommonOptions {
    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<std::string> out_dir;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "JSON run configuration");
    cmd->add_option("--seed", opts.seed, "Override the config seed");
    cmd->add_option("--out", opts.out_dir, "Override the output directory");
}

paraph::RunConfig resolve_config(const CommonOptions& opts) {
    paraph::RunConfig config = opts.config_path.empty()
                                   ? paraph::default_run_config()
                                   : paraph::load_run_config(opts.config_path);
    if (opts.seed) config.seed = *opts.seed;
    if (opts.out_dir) config.out_dir = *opts.out_dir;
    paraph::finalize_config(config);
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polarization-pair imaging simulator and spoof-rejection pipeline"};
    app.require_subcommand(1);

    CommonOptions render_opts, capture_opts, paraph_opts, detect_opts, demo_opts, sweep_opts;
    std::string frames_dir, paraph_dir;
    paraph::SweepSpec sweep_spec;

    CLI::App* render = app.add_subcommand("render", "Write analytic previews and a DoP map");
    add_common(render, render_opts);

    CLI::App* capture = app.add_subcommand("capture", "Simulate an alternating-shutter burst");
    add_common(capture, capture_opts);

    CLI::App* process = app.add_subcommand("paraph", "Compute the normalized-difference image");
    add_common(process, paraph_opts);
    process->add_option("--frames", frames_dir, "Directory containing capture.json");

    CLI::App* detect = app.add_subcommand("detect", "Classify a processed result");
    add_common(detect, detect_opts);
    detect->add_option("--paraph", paraph_dir, "Directory containing paraph.json");

    CLI::App* demo = app.add_subcommand("demo", "Run all four named scenes and print decisions");
    add_common(demo, demo_opts);

    CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter and write a CSV report");
    add_common(sweep, sweep_opts);
    sweep->add_option("--param", sweep_spec.param, "Dotted config path, e.g. rig.read_noise_sigma")
        ->required();
    sweep->add_option("--values", sweep_spec.values, "Values to try")->required()->delimiter(',');
    sweep->add_option("--reps", sweep_spec.reps, "Repetitions per value (seeded seed + rep)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (render->parsed()) {
            paraph::cmd_render(resolve_config(render_opts), std::cout);
        } else if (capture->parsed()) {
            paraph::cmd_capture(resolve_config(capture_opts), std::cout);
        } else if (process->parsed()) {
            paraph::RunConfig config = resolve_config(paraph_opts);
            paraph::cmd_paraph(config, frames_dir.empty() ? config.out_dir : frames_dir,
                               std::cout);
        } else if (detect->parsed()) {
            paraph::RunConfig config = resolve_config(detect_opts);
            paraph::cmd_detect(config, paraph_dir.empty() ? config.out_dir : paraph_dir,
                               std::cout);
        } else if (demo->parsed()) {
            paraph::cmd_demo(resolve_config(demo_opts), std::cout);
        } else if (sweep->parsed()) {
            paraph::cmd_sweep(resolve_config(sweep_opts), sweep_spec, std::cout);
        }
    } catch (const paraph::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const paraph::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "pipeline error: " << e.what() << "\n";
        return kExitPipeline;
    }
    return kExitOk;
}
