#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ghzsim/cmatrix.hpp"
#include "ghzsim/noise.hpp"

namespace ghzsim {

// com: all three qubits see one shared phase; bip: qubits 1 and 2 share,
// qubit 3 has its own; tri: three independent phases; local: deterministic
// fields, no averaging
enum class topology { com, bip, tri, local };

const char* topology_name(topology t);
topology topology_from_name(const std::string& name);

struct local_field {
    double delta_a = 1.0;
    double delta_b = 1.0;
    double delta_c = 1.0;
    double lambda = 1.0;
    double energy_split = 0.0;
};

// p|GHZ><GHZ| + (1-p) I/8, qubit 1 is the most significant bit
cmatrix initial_state(double p);

// exp(-i*split_phase) * (cos(phase) I - i sin(phase) sigma_x)
cmatrix single_qubit_unitary(double phase, double split_phase = 0.0);

// conjugates rho by u(ph1) x u(ph2) x u(ph3)
cmatrix evolve_phases(const cmatrix& rho, double ph1, double ph2, double ph3);

cmatrix evolve_local(double p, const local_field& fields, double t);

// Laurent polynomial sum c * exp(i(n1 ph1 + n2 ph2 + n3 ph3)) with
// nk = 2(ik - 1) in {-2, 0, +2}; coefficient index is 9*i1 + 3*i2 + i3
struct phase_poly {
    std::array<cdouble, 27> c{};
};

phase_poly element_poly(const cmatrix& rho, std::size_t row, std::size_t col);
cdouble poly_eval(const phase_poly& poly, double ph1, double ph2, double ph3);

// exact Gaussian average via the phase-polynomial expansion
cmatrix averaged_state(double p, double tau, const power_law_params& noise,
                       topology topo);

// Gauss-Hermite tensor-grid validator, one axis per independent phase
cmatrix averaged_state_gh(double p, double tau, const power_law_params& noise,
                          topology topo, int nodes = 64);

// Monte Carlo validator; deterministic for a fixed seed and independent of
// worker count (workers = 0 picks the hardware count)
cmatrix averaged_state_mc(double p, double tau, const power_law_params& noise,
                          topology topo, long long samples, std::uint64_t seed,
                          int workers = 0);

// new qubit k carries the state of old qubit perm[k]; qubit indices 0..2
// with 0 the most significant bit
cmatrix permute_qubits(const cmatrix& rho, const std::array<int, 3>& perm);

}  // namespace ghzsim
