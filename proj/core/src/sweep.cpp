#include "ghzsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ghzsim/measures.hpp"
#include "ghzsim/noise.hpp"

namespace ghzsim {

namespace {

double measure_by_name(const cmatrix& rho, const std::string& name) {
    if (name == "negativity") return negativity(rho);
    if (name == "ew1") return entanglement_witness(rho, witness_id::e1);
    if (name == "ew2") return entanglement_witness(rho, witness_id::e2);
    if (name == "ew3") return entanglement_witness(rho, witness_id::e3);
    if (name == "purity") return purity(rho);
    if (name == "entropy") return entropy(rho);
    throw config_error("key 'measures': unknown measure '" + name + "'");
}

cmatrix state_at(const run_config& cfg, double tau, std::uint64_t point_seed) {
    if (cfg.topo == topology::local) {
        local_field fields;
        fields.delta_a = cfg.delta_a;
        fields.delta_b = cfg.delta_b;
        fields.delta_c = cfg.delta_c;
        fields.lambda = cfg.lambda;
        return evolve_local(cfg.p, fields, tau);
    }
    const power_law_params noise(cfg.g, cfg.alpha);
    switch (cfg.engine) {
        case engine_kind::gh:
            return averaged_state_gh(cfg.p, tau, noise, cfg.topo);
        case engine_kind::mc:
            return averaged_state_mc(cfg.p, tau, noise, cfg.topo, cfg.mc_samples,
                                     point_seed, 1);
        default:
            return averaged_state(cfg.p, tau, noise, cfg.topo);
    }
}

sweep_record run_point(const run_config& cfg, double tau, std::uint64_t point_seed) {
    const cmatrix rho = state_at(cfg, tau, point_seed);
    validate_state(rho);
    sweep_record rec;
    rec.tau = tau;
    rec.topo = cfg.topo;
    rec.p = cfg.p;
    rec.g = cfg.g;
    rec.alpha = cfg.alpha;
    rec.lambda = cfg.lambda;
    rec.values.reserve(cfg.measures.size());
    for (const auto& name : cfg.measures) {
        rec.values.push_back(measure_by_name(rho, name));
    }
    return rec;
}

// slot-indexed task pool; per-point seeds fix the output independent of how
// points land on workers
std::vector<sweep_record> run_grid(const std::vector<run_config>& cfgs,
                                   std::uint64_t master_seed, int threads) {
    const std::size_t steps = static_cast<std::size_t>(cfgs.front().tau_steps);
    const std::size_t total = cfgs.size() * steps;
    std::vector<sweep_record> records(total);
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) {
                break;
            }
            const run_config& cfg = cfgs[i / steps];
            const std::size_t ti = i % steps;
            const double tau =
                cfg.tau_max * static_cast<double>(ti) / static_cast<double>(steps - 1);
            records[i] = run_point(cfg, tau, mix_seed(master_seed, i));
        }
    };

    std::size_t nworkers =
        threads > 0 ? static_cast<std::size_t>(threads)
                    : static_cast<std::size_t>(std::thread::hardware_concurrency());
    if (nworkers < 1) {
        nworkers = 1;
    }
    nworkers = std::min(nworkers, total);

    if (nworkers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (std::size_t i = 0; i < nworkers; ++i) {
            pool.emplace_back(work);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    return records;
}

}  // namespace

std::vector<sweep_record> run_evolve(const run_config& cfg, int threads) {
    cfg.validate();
    return run_grid({cfg}, cfg.seed, threads);
}

std::vector<sweep_record> run_sweep(const run_config& cfg, const std::string& axis,
                                    const std::vector<double>& values, int threads) {
    cfg.validate();
    if (axis != "p" && axis != "g" && axis != "alpha" && axis != "lambda") {
        throw config_error("sweep axis must be one of p, g, alpha, lambda");
    }
    if (values.empty()) {
        throw config_error("sweep needs at least one axis value");
    }
    std::vector<run_config> cfgs;
    cfgs.reserve(values.size());
    for (double v : values) {
        run_config point = cfg;
        if (axis == "p") {
            point.p = v;
        } else if (axis == "g") {
            point.g = v;
        } else if (axis == "alpha") {
            point.alpha = v;
        } else {
            point.lambda = v;
        }
        point.validate();
        cfgs.push_back(point);
    }
    return run_grid(cfgs, cfg.seed, threads);
}

}  // namespace ghzsim
