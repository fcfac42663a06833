// qsl.cpp — Command-line surface: simulate / verify / sweep over a single JSON
// run configuration.
//
// Exit codes: 0 success, 1 claim-check failure, 2 config error, 3 numeric
// failure.

#include "qsl/cli_commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"quantum speed limit laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::string schedule_name;
    double tau = 1.0;
    int steps = 4096;

    CLI::App* simulate = app.add_subcommand("simulate", "propagate one schedule and report bounds");
    simulate->add_option("--config", config_path, "run configuration (JSON)")->required();
    simulate->add_option("--schedule", schedule_name, "schedule name from the config")->required();
    simulate->add_option("--tau", tau, "evolution horizon")->required();
    simulate->add_option("--steps", steps, "grid steps");

    CLI::App* verify = app.add_subcommand("verify", "run the claim-check experiments");
    verify->add_option("--config", config_path, "run configuration (JSON)")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "randomized bound sweep to CSV");
    sweep->add_option("--config", config_path, "run configuration (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Bad invocations share the config-error exit code.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const qsl::cli::RunConfig config = qsl::cli::load_config(config_path);
        if (simulate->parsed()) {
            return qsl::cli::cmd_simulate(config, schedule_name, tau, steps);
        }
        if (verify->parsed()) {
            return qsl::cli::cmd_verify(config);
        }
        return qsl::cli::cmd_sweep(config);
    } catch (const qsl::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    }
}
