#pragma once

#include "ghzsim/cmatrix.hpp"

namespace ghzsim {

// witness thresholds 1/2, 2/3, 3/4 against the pure GHZ projector
enum class witness_id { e1, e2, e3 };

struct measure_panel {
    double negativity = 0.0;
    double witness_value = 0.0;
    double purity = 0.0;
    double entropy = 0.0;
};

cmatrix ghz_projector();

// rejects anything that is not an 8x8 state: Hermitian within 1e-12,
// trace within 1e-12 of 1, minimum eigenvalue above -1e-10
void validate_state(const cmatrix& rho);

// sum of absolute partial-transpose eigenvalues minus one, clamped to zero
// below 1e-12; qubit indices 0..2 with 0 the most significant bit
double bipartite_negativity(const cmatrix& rho, int qubit);

// geometric mean of the three bipartite negativities; zero if any factor
// vanishes
double negativity(const cmatrix& rho);

// -Tr[E rho] with E = threshold*I - |GHZ><GHZ|; positive values certify
// entanglement, zero or negative values are inconclusive
double entanglement_witness(const cmatrix& rho, witness_id id);

double purity(const cmatrix& rho);

// von Neumann entropy in nats; eigenvalues within 1e-10 of zero are clamped
double entropy(const cmatrix& rho);

measure_panel measure_all(const cmatrix& rho, witness_id id = witness_id::e1);

}  // namespace ghzsim
