#include "ghzsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ghzsim {

namespace {

std::string trim(const std::string& s) {
    const std::size_t lo = s.find_first_not_of(" \t\r\n");
    if (lo == std::string::npos) {
        return "";
    }
    const std::size_t hi = s.find_last_not_of(" \t\r\n");
    return s.substr(lo, hi - lo + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(v)) {
            throw std::invalid_argument("");
        }
        return v;
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': unparsable number '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("");
        }
        return v;
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': unparsable integer '" + value + "'");
    }
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
    try {
        // stoull would wrap negative input instead of failing
        if (value.find('-') != std::string::npos) {
            throw std::invalid_argument("");
        }
        std::size_t used = 0;
        const unsigned long long v = std::stoull(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("");
        }
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': unparsable seed '" + value + "'");
    }
}

bool known_measure(const std::string& name) {
    static const std::vector<std::string> names = {"negativity", "ew1", "ew2",
                                                   "ew3", "purity", "entropy"};
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> parse_measures(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        if (!known_measure(item)) {
            throw config_error("key 'measures': unknown measure '" + item + "'");
        }
        if (std::find(out.begin(), out.end(), item) == out.end()) {
            out.push_back(item);
        }
    }
    if (out.empty()) {
        throw config_error("key 'measures': empty measure list");
    }
    return out;
}

}  // namespace

const char* engine_name(engine_kind e) {
    switch (e) {
        case engine_kind::fourier: return "fourier";
        case engine_kind::gh: return "gh";
        case engine_kind::mc: return "mc";
    }
    throw config_error("unknown engine");
}

const char* format_name(out_format f) {
    switch (f) {
        case out_format::csv: return "csv";
        case out_format::json: return "json";
        case out_format::svg: return "svg";
    }
    throw config_error("unknown format");
}

std::vector<std::string> run_config::default_measures() {
    return {"negativity", "ew1", "ew2", "ew3", "purity", "entropy"};
}

void run_config::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw config_error("key 'p': must lie in [0, 1]");
    }
    if (!(lambda >= 0.0)) {
        throw config_error("key 'lambda': must be non-negative");
    }
    if (!(g > 0.0)) {
        throw config_error("key 'g': must be positive");
    }
    if (!(alpha > 1.0)) {
        throw config_error("key 'alpha': must exceed 1");
    }
    if (std::abs(alpha - 2.0) <= 1e-9) {
        throw config_error("key 'alpha': the phase variance is undefined at alpha = 2");
    }
    if (!(tau_max > 0.0)) {
        throw config_error("key 'tau_max': must be positive");
    }
    if (tau_steps < 2) {
        throw config_error("key 'tau_steps': need at least 2 grid points");
    }
    if (mc_samples < 1) {
        throw config_error("key 'mc_samples': need at least 1 sample");
    }
    if (measures.empty()) {
        throw config_error("key 'measures': empty measure list");
    }
    for (const auto& m : measures) {
        if (!known_measure(m)) {
            throw config_error("key 'measures': unknown measure '" + m + "'");
        }
    }
}

void apply_setting(run_config& cfg, const std::string& key, const std::string& value) {
    if (key == "topology") {
        try {
            cfg.topo = topology_from_name(value);
        } catch (const std::invalid_argument&) {
            throw config_error("key 'topology': unknown topology '" + value + "'");
        }
    } else if (key == "p") {
        cfg.p = parse_double(key, value);
    } else if (key == "lambda") {
        cfg.lambda = parse_double(key, value);
    } else if (key == "delta_a") {
        cfg.delta_a = parse_double(key, value);
    } else if (key == "delta_b") {
        cfg.delta_b = parse_double(key, value);
    } else if (key == "delta_c") {
        cfg.delta_c = parse_double(key, value);
    } else if (key == "g") {
        cfg.g = parse_double(key, value);
    } else if (key == "alpha") {
        cfg.alpha = parse_double(key, value);
    } else if (key == "tau_max") {
        cfg.tau_max = parse_double(key, value);
    } else if (key == "tau_steps") {
        const long long v = parse_int(key, value);
        if (v < 2 || v > 1000000) {
            throw config_error("key 'tau_steps': out of range");
        }
        cfg.tau_steps = static_cast<int>(v);
    } else if (key == "measures") {
        cfg.measures = parse_measures(value);
    } else if (key == "mc_samples") {
        cfg.mc_samples = parse_int(key, value);
    } else if (key == "seed") {
        cfg.seed = parse_seed(key, value);
    } else if (key == "engine") {
        if (value == "fourier") {
            cfg.engine = engine_kind::fourier;
        } else if (value == "gh") {
            cfg.engine = engine_kind::gh;
        } else if (value == "mc") {
            cfg.engine = engine_kind::mc;
        } else {
            throw config_error("key 'engine': unknown engine '" + value + "'");
        }
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "format") {
        if (value == "csv") {
            cfg.format = out_format::csv;
        } else if (value == "json") {
            cfg.format = out_format::json;
        } else if (value == "svg") {
            cfg.format = out_format::svg;
        } else {
            throw config_error("key 'format': unknown format '" + value + "'");
        }
    } else {
        throw config_error("unknown key '" + key + "'");
    }
}

void apply_config_text(run_config& cfg, const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("line " + std::to_string(lineno) +
                               ": expected key = value, got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw config_error("line " + std::to_string(lineno) + ": empty key");
        }
        apply_setting(cfg, key, value);
    }
}

run_config parse_config(const std::string& text) {
    run_config cfg;
    apply_config_text(cfg, text);
    cfg.validate();
    return cfg;
}

}  // namespace ghzsim
