#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzsim/dynamics.hpp"

namespace ghzsim {

enum class engine_kind { fourier, gh, mc };
enum class out_format { csv, json, svg };

const char* engine_name(engine_kind e);
const char* format_name(out_format f);

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct run_config {
    topology topo = topology::com;
    double p = 1.0;
    double lambda = 1.0;
    double delta_a = 1.0;
    double delta_b = 1.0;
    double delta_c = 1.0;
    double g = 1e-2;
    double alpha = 3.0;
    double tau_max = 20.0;
    int tau_steps = 400;
    std::vector<std::string> measures = default_measures();
    long long mc_samples = 100000;
    std::uint64_t seed = 42;
    engine_kind engine = engine_kind::fourier;
    std::string out;  // empty writes to stdout
    out_format format = out_format::csv;

    static std::vector<std::string> default_measures();

    // throws config_error naming the offending key
    void validate() const;
};

// applies one key=value setting; unknown keys and unparsable values raise
// config_error naming the key
void apply_setting(run_config& cfg, const std::string& key, const std::string& value);

// parses key=value lines with '#' comments on top of cfg, without the final
// invariant check (command-line overrides may still follow)
void apply_config_text(run_config& cfg, const std::string& text);

// parse and fully validate a standalone config text
run_config parse_config(const std::string& text);

}  // namespace ghzsim
