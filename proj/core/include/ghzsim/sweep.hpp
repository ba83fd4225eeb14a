#pragma once

#include <string>
#include <vector>

#include "ghzsim/config.hpp"

namespace ghzsim {

struct sweep_record {
    double tau = 0.0;
    topology topo = topology::com;
    double p = 1.0;
    double g = 0.0;
    double alpha = 0.0;
    double lambda = 1.0;
    std::vector<double> values;  // aligned with the configured measure list
};

// one record per point of the uniform tau grid [0, tau_max]; deterministic
// for a fixed config and seed, independent of the thread count (0 = auto)
std::vector<sweep_record> run_evolve(const run_config& cfg, int threads = 0);

// cross product of axis values and the tau grid, ordered by (value, tau);
// axis is one of p, g, alpha, lambda
std::vector<sweep_record> run_sweep(const run_config& cfg, const std::string& axis,
                                    const std::vector<double>& values,
                                    int threads = 0);

}  // namespace ghzsim
