#include "ghzsim/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace ghzsim {

double ew_local(topology topo, double t, double p, double lambda,
                const std::array<double, 3>& deltas) {
    if (t < 0.0) {
        throw std::invalid_argument("ew_local: t must be non-negative");
    }
    const double da = deltas[0];
    const double db = deltas[1];
    const double dc = deltas[2];
    switch (topo) {
        case topology::com:
            return p * (-4.0 + 5.0 * p + 3.0 * p * std::cos(4.0 * t * da * lambda)) / 8.0;
        case topology::bip:
            return p *
                   (-4.0 + 3.0 * p + p * std::cos(4.0 * t * da * lambda) +
                    2.0 * p *
                        (std::cos(2.0 * t * (da - db) * lambda) +
                         std::cos(2.0 * t * (da + db) * lambda))) /
                   8.0;
        case topology::tri:
            return p *
                   (2.0 * (-2.0 + p) +
                    p * (std::cos(2.0 * t * (da - db) * lambda) +
                         std::cos(2.0 * t * (da + db) * lambda) +
                         std::cos(2.0 * t * (da - dc) * lambda) +
                         std::cos(2.0 * t * (da + dc) * lambda) +
                         std::cos(2.0 * t * (db - dc) * lambda) +
                         std::cos(2.0 * t * (db + dc) * lambda))) /
                   8.0;
        default:
            throw std::invalid_argument("ew_local: no closed form for this topology");
    }
}

double ew_noisy_com(double tau, double p, const power_law_params& noise) {
    if (tau < 0.0) {
        throw std::invalid_argument("ew_noisy_com: tau must be non-negative");
    }
    const double omega = char_fn(4, beta_closed(tau, noise));
    return p * (-4.0 + (5.0 + 3.0 * omega) * p) / 8.0;
}

cmatrix fixture_state(fixture_block block, double tau, const power_law_params& noise) {
    if (tau < 0.0) {
        throw std::invalid_argument("fixture_state: tau must be non-negative");
    }
    const double beta = beta_closed(tau, noise);
    cmatrix rho = cmatrix::zero(8, 8);

    switch (block) {
        case fixture_block::co: {
            const double eta = std::exp(-8.0 * beta);
            const double nu11 = 5.0 / 16.0 + 3.0 * eta / 16.0;
            const double nu12 = -1.0 / 16.0 + eta / 16.0;
            const double nu13 = 1.0 / 16.0 - eta / 16.0;
            for (std::size_t i = 0; i < 8; ++i) {
                const bool ci = (i == 0 || i == 7);
                for (std::size_t j = 0; j < 8; ++j) {
                    const bool cj = (j == 0 || j == 7);
                    rho(i, j) = (ci && cj) ? nu11 : ((ci || cj) ? nu12 : nu13);
                }
            }
            break;
        }
        case fixture_block::mx: {
            const double eta1 = std::exp(-4.0 * beta);
            const double eta2 = std::exp(-8.0 * beta);
            const double nu14 = 3.0 / 16.0 + eta1 / 4.0 + eta2 / 16.0;
            const double nu15 = -1.0 / 16.0 + eta2 / 16.0;
            const double nu16 = 1.0 / 16.0 - eta2 / 16.0;
            const double nu17 = 3.0 / 16.0 - eta1 / 4.0 + eta2 / 16.0;
            const std::array<std::size_t, 2> corner = {0, 7};
            const std::array<std::size_t, 2> paired = {2, 5};
            const std::array<std::size_t, 4> rest = {1, 3, 4, 6};
            for (std::size_t i : corner) {
                for (std::size_t j : corner) {
                    rho(i, j) = nu14;
                }
                for (std::size_t j : paired) {
                    rho(i, j) = nu15;
                    rho(j, i) = nu15;
                }
            }
            for (std::size_t i : paired) {
                for (std::size_t j : paired) {
                    rho(i, j) = nu17;
                }
            }
            for (std::size_t i : rest) {
                for (std::size_t j : rest) {
                    rho(i, j) = nu16;
                }
            }
            break;
        }
        case fixture_block::in: {
            const double eta = std::exp(-4.0 * beta);
            const double nu18 = 1.0 / 8.0 + 3.0 * eta / 8.0;
            const double nu19 = 1.0 / 8.0 - eta / 8.0;
            rho(0, 0) = rho(0, 7) = rho(7, 0) = rho(7, 7) = nu18;
            for (std::size_t i = 1; i < 7; ++i) {
                rho(i, i) = nu19;
                rho(i, 7 - i) = nu19;
            }
            break;
        }
    }
    return rho;
}

std::vector<table_target> table_targets() {
    const double neg_com = std::sqrt(0.5);
    const double ent_com = -(0.75 * std::log(0.75) + 0.25 * std::log(0.25));
    const double ent_bip = -(0.5 * std::log(0.5) + 2.0 * 0.25 * std::log(0.25));
    const double ent_tri = std::log(4.0);

    std::vector<table_target> rows = {
        {"negativity", topology::com, 0.2, neg_com, 0.1, false},
        {"negativity", topology::bip, 0.0, 0.0, 0.1, false},
        {"negativity", topology::tri, 0.0, 0.0, 0.1, false},
        {"ew1", topology::com, 0.2, 0.125, 0.1, false},
        {"ew1", topology::bip, -0.1, -0.125, 0.1, false},
        {"ew1", topology::tri, -0.2, -0.25, 0.1, false},
        {"purity", topology::com, 0.65, 0.625, 0.05, false},
        {"purity", topology::bip, 0.4, 0.375, 0.05, false},
        {"purity", topology::tri, 0.25, 0.25, 0.05, false},
        {"entropy", topology::com, 0.44, ent_com, 0.1, false},
        {"entropy", topology::bip, 1.1, ent_bip, 0.1, false},
        {"entropy", topology::tri, 1.4, ent_tri, 0.1, false},
    };
    for (auto& row : rows) {
        row.confirmed = std::abs(row.reported - row.derived) <= row.tolerance;
    }
    return rows;
}

}  // namespace ghzsim
