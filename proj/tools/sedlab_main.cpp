#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sedlab/config.hpp"
#include "sedlab/errors.hpp"
#include "sedlab/experiments.hpp"
#include "sedlab/version.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw sedlab::ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void print_table() {
    std::cout << "experiments:\n";
    for (const sedlab::ExperimentInfo& info : sedlab::experiment_table()) {
        std::cout << "  " << info.name << "\n";
        if (!info.required.empty()) {
            std::cout << "    required:";
            for (const std::string& k : info.required)
                std::cout << ' ' << k;
            std::cout << '\n';
        }
        if (!info.optional.empty()) {
            std::cout << "    optional:";
            for (const auto& [k, dflt] : info.optional)
                std::cout << ' ' << k << '=' << dflt;
            std::cout << '\n';
        }
    }
    std::cout << "  global keys: seed=" << sedlab::default_seed << " out=.\n";
}

}

int main(int argc, char** argv) {
    CLI::App app{"stochastic pilot-wave laboratory"};
    app.set_version_flag("--version", sedlab::version_string);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_override;
    std::uint64_t seed_override = 0;
    bool seed_given = false;

    CLI::App* run = app.add_subcommand("run", "run an experiment described by a config file");
    run->add_option("config", config_path, "path to the config file")->required();
    run->add_option("--out", out_override, "output directory (overrides config)");
    run->add_option("--seed", seed_override, "random seed (overrides config)")
        ->check(CLI::NonNegativeNumber);

    CLI::App* list = app.add_subcommand("list", "list available experiments and their keys");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    seed_given = run->count("--seed") > 0;

    try {
        if (list->parsed()) {
            print_table();
            return 0;
        }
        sedlab::ExperimentConfig cfg = sedlab::parse_config(read_file(config_path));
        if (!out_override.empty())
            cfg.output_path = out_override;
        if (seed_given)
            cfg.seed = seed_override;
        return sedlab::run_experiment(cfg);
    } catch (const sedlab::ResolutionError& e) {
        std::cerr << "resolution error: " << e.what() << '\n';
        return 3;
    } catch (const sedlab::StatisticsError& e) {
        std::cerr << "statistics error: " << e.what() << '\n';
        return 4;
    } catch (const sedlab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
