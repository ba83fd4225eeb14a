#include "ghzsim/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace ghzsim {

namespace {

double witness_threshold(witness_id id) {
    switch (id) {
        case witness_id::e1: return 1.0 / 2.0;
        case witness_id::e2: return 2.0 / 3.0;
        case witness_id::e3: return 3.0 / 4.0;
    }
    throw std::invalid_argument("entanglement_witness: unknown witness id");
}

// negativity across one cut of an already validated state
double cut_negativity(const cmatrix& rho, int qubit) {
    const cmatrix pt = partial_transpose(rho, qubit);
    double sum = 0.0;
    for (double lam : hermitian_eigenvalues(pt)) {
        if (std::abs(lam) <= 1e-10) {
            continue;
        }
        sum += std::abs(lam);
    }
    double neg = sum - 1.0;
    if (neg < 1e-12) {
        neg = 0.0;
    }
    return neg;
}

}  // namespace

cmatrix ghz_projector() {
    cmatrix proj = cmatrix::zero(8, 8);
    proj(0, 0) = proj(0, 7) = proj(7, 0) = proj(7, 7) = 0.5;
    return proj;
}

void validate_state(const cmatrix& rho) {
    if (rho.rows != 8 || rho.cols != 8) {
        throw std::invalid_argument("validate_state: expected an 8x8 density matrix");
    }
    if (!is_hermitian(rho, 1e-12)) {
        throw std::invalid_argument("validate_state: matrix is not Hermitian within 1e-12");
    }
    const cdouble tr = mat_trace(rho);
    if (std::abs(tr - cdouble(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("validate_state: trace is not 1 within 1e-12");
    }
    const std::vector<double> eigs = hermitian_eigenvalues(rho);
    if (eigs.back() <= -1e-10) {
        throw std::invalid_argument("validate_state: matrix is not positive semidefinite");
    }
}

double bipartite_negativity(const cmatrix& rho, int qubit) {
    if (qubit < 0 || qubit > 2) {
        throw std::invalid_argument("bipartite_negativity: qubit index must be 0, 1, or 2");
    }
    validate_state(rho);
    return cut_negativity(rho, qubit);
}

double negativity(const cmatrix& rho) {
    validate_state(rho);
    double product = 1.0;
    for (int qubit = 0; qubit < 3; ++qubit) {
        const double factor = cut_negativity(rho, qubit);
        if (factor == 0.0) {
            return 0.0;
        }
        product *= factor;
    }
    return std::cbrt(product);
}

double entanglement_witness(const cmatrix& rho, witness_id id) {
    if (rho.rows != 8 || rho.cols != 8) {
        throw std::invalid_argument("entanglement_witness: expected an 8x8 matrix");
    }
    const double fidelity =
        0.5 * (rho(0, 0) + rho(0, 7) + rho(7, 0) + rho(7, 7)).real();
    return fidelity - witness_threshold(id) * mat_trace(rho).real();
}

double purity(const cmatrix& rho) {
    if (rho.rows != rho.cols) {
        throw std::invalid_argument("purity: expected a square matrix");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.rows; ++i) {
        for (std::size_t j = 0; j < rho.cols; ++j) {
            sum += (rho(i, j) * rho(j, i)).real();
        }
    }
    return sum;
}

double entropy(const cmatrix& rho) {
    double ent = 0.0;
    for (double lam : hermitian_eigenvalues(rho)) {
        if (std::abs(lam) <= 1e-10 || lam <= 0.0) {
            continue;
        }
        ent -= lam * std::log(lam);
    }
    // eigenvalues a rounding error above 1 leave a negligible negative residue
    if (ent < 0.0 && ent > -1e-12) {
        ent = 0.0;
    }
    return ent;
}

measure_panel measure_all(const cmatrix& rho, witness_id id) {
    measure_panel panel;
    panel.negativity = negativity(rho);
    panel.witness_value = entanglement_witness(rho, id);
    panel.purity = purity(rho);
    panel.entropy = entropy(rho);
    return panel;
}

}  // namespace ghzsim
