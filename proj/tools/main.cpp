// Command-line driver: eigen | propagate | lorentz | validate, each taking a
// JSON config and an output directory of CSV/JSON artifacts.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "dispwave/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"WKB mode simulator for planar waves in separable dispersive media"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    for (const char* name : {"eigen", "propagate", "lorentz", "validate"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON experiment configuration")->required();
        sub->add_option("--out", out_dir, "output directory");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string cmd = app.get_subcommands().front()->get_name();

    try {
        const dispwave::io::ExperimentConfig cfg = dispwave::io::load_config(config_path);
        if (cmd == "eigen")
            dispwave::io::cmd_eigen(cfg, out_dir);
        else if (cmd == "propagate")
            dispwave::io::cmd_propagate(cfg, out_dir);
        else if (cmd == "lorentz")
            dispwave::io::cmd_lorentz(cfg, out_dir);
        else
            dispwave::io::cmd_validate(cfg, out_dir);
    } catch (const dispwave::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
