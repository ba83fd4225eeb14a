#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghzsim/config.hpp"
#include "ghzsim/emit.hpp"
#include "ghzsim/sweep.hpp"
#include "ghzsim/validate.hpp"

namespace {

struct option_store {
    std::string config_path;
    std::map<std::string, std::string> values;
    int threads = 0;
};

// every config key doubles as a long option; overrides beat the file
const std::vector<std::string> config_keys = {
    "topology", "p",        "lambda",   "delta_a",    "delta_b", "delta_c",
    "g",        "alpha",    "tau_max",  "tau_steps",  "measures", "mc_samples",
    "seed",     "engine",   "out",      "format"};

void add_run_options(CLI::App* cmd, option_store& store) {
    cmd->add_option("--config", store.config_path, "key=value config file");
    for (const auto& key : config_keys) {
        // raw strings funneled through apply_setting for uniform diagnostics
        cmd->add_option("--" + key, store.values[key]);
    }
    cmd->add_option("--threads", store.threads, "worker threads (0 = auto)");
}

ghzsim::run_config build_config(CLI::App* cmd, const option_store& store) {
    ghzsim::run_config cfg;
    if (!store.config_path.empty()) {
        std::ifstream file(store.config_path);
        if (!file) {
            throw ghzsim::io_error("cannot read config file '" + store.config_path + "'");
        }
        std::stringstream ss;
        ss << file.rdbuf();
        ghzsim::apply_config_text(cfg, ss.str());
    }
    for (const auto& key : config_keys) {
        if (cmd->count("--" + key) > 0) {
            ghzsim::apply_setting(cfg, key, store.values.at(key));
        }
    }
    cfg.validate();
    return cfg;
}

std::vector<double> parse_axis_values(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t lo = item.find_first_not_of(" \t");
        if (lo == std::string::npos) {
            continue;
        }
        const std::size_t hi = item.find_last_not_of(" \t");
        const std::string token = item.substr(lo, hi - lo + 1);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) {
                throw std::invalid_argument("");
            }
        } catch (const std::exception&) {
            throw ghzsim::config_error("sweep values: unparsable number '" + token + "'");
        }
    }
    if (out.empty()) {
        throw ghzsim::config_error("sweep needs at least one axis value");
    }
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ghzsim::io_error("cannot open '" + path + "' for writing");
    }
    file << text;
    file.flush();
    if (!file) {
        throw ghzsim::io_error("failed while writing '" + path + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-qubit dephasing simulator"};
    app.require_subcommand(1);

    option_store evolve_store;
    CLI::App* evolve = app.add_subcommand("evolve", "measures over a tau grid");
    add_run_options(evolve, evolve_store);

    option_store sweep_store;
    CLI::App* sweep = app.add_subcommand("sweep", "tau grid per axis value");
    add_run_options(sweep, sweep_store);
    std::string axis;
    std::string values_csv;
    sweep->add_option("--axis", axis, "p | g | alpha | lambda")->required();
    sweep->add_option("--values", values_csv, "comma-separated axis values")->required();

    CLI::App* validate = app.add_subcommand("validate", "run the self-check suite");
    bool as_json = false;
    std::string validate_out;
    std::string fixtures_out;
    std::string inject_fault;
    validate->add_flag("--json", as_json, "emit the report as JSON");
    validate->add_option("--out", validate_out, "report file (default stdout)");
    validate->add_option("--fixtures", fixtures_out, "write the table-target CSV here");
    validate->add_option("--inject-fault", inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (evolve->parsed()) {
            const ghzsim::run_config cfg = build_config(evolve, evolve_store);
            ghzsim::emit(ghzsim::run_evolve(cfg, evolve_store.threads), cfg);
        } else if (sweep->parsed()) {
            const ghzsim::run_config cfg = build_config(sweep, sweep_store);
            ghzsim::emit(ghzsim::run_sweep(cfg, axis, parse_axis_values(values_csv),
                                           sweep_store.threads),
                         cfg);
        } else {
            const ghzsim::validate_report rep = ghzsim::run_validate(inject_fault);
            write_text(validate_out, as_json ? ghzsim::report_json(rep)
                                             : ghzsim::report_text(rep));
            if (!fixtures_out.empty()) {
                write_text(fixtures_out, ghzsim::fixture_csv());
            }
            if (!rep.ok()) {
                return 2;
            }
        }
    } catch (const ghzsim::io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const ghzsim::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
