#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ghzsim/dynamics.hpp"

using namespace ghzsim;

namespace {

const power_law_params defaults(1e-2, 3.0);

double purity_of(const cmatrix& rho) {
    return mat_trace(mat_mul(rho, rho)).real();
}

double max_imag_diag(const cmatrix& rho) {
    double worst = 0.0;
    for (std::size_t i = 0; i < rho.rows; ++i) {
        worst = std::max(worst, std::abs(rho(i, i).imag()));
    }
    return worst;
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("topology names round-trip") {
    for (topology t : {topology::com, topology::bip, topology::tri, topology::local}) {
        CHECK(topology_from_name(topology_name(t)) == t);
    }
    CHECK_THROWS_AS(topology_from_name("ring"), std::invalid_argument);
}

TEST_CASE("initial state mixes the ghz projector with white noise") {
    cmatrix pure = initial_state(1.0);
    CHECK(std::abs(mat_trace(pure) - 1.0) < 1e-14);
    CHECK(purity_of(pure) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pure(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pure(0, 7).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pure(1, 1) == cdouble(0.0));

    cmatrix mixed = initial_state(0.0);
    CHECK(frobenius_dist(mixed, cdouble(1.0 / 8.0) * cmatrix::identity(8)) < 1e-15);

    // Tr rho^2 = (7 p^2 + 1) / 8
    CHECK(purity_of(initial_state(0.7)) == doctest::Approx(0.55375).epsilon(1e-13));

    CHECK_THROWS_AS(initial_state(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(initial_state(1.01), std::invalid_argument);
}

TEST_CASE("single qubit unitary special values") {
    cmatrix u0 = single_qubit_unitary(0.0);
    CHECK(frobenius_dist(u0, cmatrix::identity(2)) < 1e-15);

    cmatrix uq = single_qubit_unitary(std::numbers::pi / 2.0);
    CHECK(std::abs(uq(0, 0)) < 1e-15);
    CHECK(std::abs(uq(0, 1).real()) < 1e-15);
    CHECK(uq(0, 1).imag() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(uq(1, 0).imag() == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("single qubit unitary is unitary and composes additively") {
    for (double phi : {0.3, 1.1, 2.9}) {
        cmatrix u = single_qubit_unitary(phi, 0.4);
        CHECK(frobenius_dist(mat_mul(u, mat_dagger(u)), cmatrix::identity(2)) < 1e-14);
    }
    cmatrix a = single_qubit_unitary(0.5);
    cmatrix b = single_qubit_unitary(0.8);
    cmatrix ab = mat_mul(a, b);
    CHECK(frobenius_dist(ab, single_qubit_unitary(1.3)) < 1e-14);
}

TEST_CASE("local evolution is trivial at t = 0 and ignores the energy split") {
    local_field f;
    for (double p : {0.3, 1.0}) {
        CHECK(frobenius_dist(evolve_local(p, f, 0.0), initial_state(p)) < 1e-14);
    }
    local_field split = f;
    split.energy_split = 7.3;
    // the split enters only as a per-qubit global phase and cancels in rho
    CHECK(frobenius_dist(evolve_local(1.0, f, 1.7), evolve_local(1.0, split, 1.7)) < 1e-12);
    CHECK_THROWS_AS(evolve_local(1.0, f, -0.1), std::invalid_argument);
}

TEST_CASE("local evolution depends on lambda and time only through their product") {
    local_field slow;
    slow.lambda = 0.3;
    local_field fast;
    fast.lambda = 0.6;
    for (double t : {0.5, 1.9, 4.2}) {
        CHECK(frobenius_dist(evolve_local(0.8, slow, t), evolve_local(0.8, fast, t / 2.0)) < 1e-13);
    }
}

TEST_CASE("phase polynomial reproduces direct conjugation") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    cmatrix rho = initial_state(0.85);
    for (int trial = 0; trial < 4; ++trial) {
        double ph1 = dist(rng), ph2 = dist(rng), ph3 = dist(rng);
        cmatrix direct = evolve_phases(rho, ph1, ph2, ph3);
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t c = 0; c < 8; ++c) {
                cdouble via_poly = poly_eval(element_poly(rho, r, c), ph1, ph2, ph3);
                CHECK(std::abs(via_poly - direct(r, c)) < 1e-12);
            }
        }
    }
    // zero phases recover the element itself
    cdouble same = poly_eval(element_poly(rho, 0, 7), 0.0, 0.0, 0.0);
    CHECK(std::abs(same - rho(0, 7)) < 1e-14);
}

TEST_CASE("averaging at tau = 0 returns the initial state") {
    for (topology topo : {topology::com, topology::bip, topology::tri}) {
        CHECK(frobenius_dist(averaged_state(0.8, 0.0, defaults, topo), initial_state(0.8)) < 1e-13);
    }
}

TEST_CASE("shared phase corner element") {
    double tau = 2.0;
    double b = beta_closed(tau, defaults);
    cmatrix rho = averaged_state(1.0, tau, defaults, topology::com);
    double corner = (5.0 + 3.0 * std::exp(-8.0 * b)) / 16.0;
    CHECK(rho(0, 0).real() == doctest::Approx(corner).epsilon(1e-12));
    CHECK(rho(0, 7).real() == doctest::Approx(corner).epsilon(1e-12));
    CHECK(max_imag_diag(rho) < 1e-13);
}

TEST_CASE("independent phase matrix entries") {
    double tau = 2.0;
    double b = beta_closed(tau, defaults);
    double e4 = std::exp(-4.0 * b);
    cmatrix rho = averaged_state(1.0, tau, defaults, topology::tri);
    CHECK(rho(0, 0).real() == doctest::Approx((1.0 + 3.0 * e4) / 8.0).epsilon(1e-12));
    CHECK(rho(0, 7).real() == doctest::Approx((1.0 + 3.0 * e4) / 8.0).epsilon(1e-12));
    CHECK(rho(1, 1).real() == doctest::Approx((1.0 - e4) / 8.0).epsilon(1e-12));
    CHECK(rho(1, 6).real() == doctest::Approx((1.0 - e4) / 8.0).epsilon(1e-12));
    CHECK(std::abs(rho(1, 2)) < 1e-14);
}

TEST_CASE("paired phase off-diagonal element") {
    double tau = 2.0;
    double b = beta_closed(tau, defaults);
    cmatrix rho = averaged_state(1.0, tau, defaults, topology::bip);
    // <a_000 a_001*> = (exp(-8 beta) - 1) / 16: the shared-pair cross terms cancel
    CHECK(rho(0, 1).real() == doctest::Approx((std::exp(-8.0 * b) - 1.0) / 16.0).epsilon(1e-12));
    CHECK(std::abs(rho(0, 1).imag()) < 1e-13);
}

TEST_CASE("averaging rejects the deterministic topology") {
    CHECK_THROWS_AS(averaged_state(1.0, 1.0, defaults, topology::local), std::invalid_argument);
    CHECK_THROWS_AS(averaged_state_gh(1.0, 1.0, defaults, topology::local, 8), std::invalid_argument);
    CHECK_THROWS_AS(averaged_state_mc(1.0, 1.0, defaults, topology::local, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(averaged_state(1.0, -0.5, defaults, topology::com), std::invalid_argument);
}

TEST_CASE("qubit permutation basics") {
    cmatrix rho = averaged_state(0.9, 2.0, defaults, topology::bip);
    std::array<int, 3> identity_perm{0, 1, 2};
    CHECK(frobenius_dist(permute_qubits(rho, identity_perm), rho) < 1e-15);
    std::array<int, 3> swap23{0, 2, 1};
    CHECK(frobenius_dist(permute_qubits(permute_qubits(rho, swap23), swap23), rho) < 1e-15);
    CHECK_THROWS_AS(permute_qubits(rho, std::array<int, 3>{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(permute_qubits(rho, std::array<int, 3>{0, 1, 3}), std::invalid_argument);
}

TEST_CASE("permutation symmetry by topology") {
    double tau = 2.0;
    std::array<int, 3> rot{1, 2, 0};
    std::array<int, 3> swap12{1, 0, 2};
    std::array<int, 3> swap23{0, 2, 1};

    cmatrix com = averaged_state(1.0, tau, defaults, topology::com);
    CHECK(frobenius_dist(permute_qubits(com, rot), com) < 1e-13);

    cmatrix tri = averaged_state(1.0, tau, defaults, topology::tri);
    CHECK(frobenius_dist(permute_qubits(tri, rot), tri) < 1e-13);

    // the pair (qubits 1,2) may be swapped, but pair and lone qubit may not
    cmatrix bip = averaged_state(1.0, tau, defaults, topology::bip);
    CHECK(frobenius_dist(permute_qubits(bip, swap12), bip) < 1e-13);
    CHECK(frobenius_dist(permute_qubits(bip, swap23), bip) > 1e-3);
}

TEST_CASE("the three topologies genuinely differ and drift apart") {
    double prev_cb = 0.0, prev_ct = 0.0, prev_bt = 0.0;
    for (double tau : {0.5, 2.0, 5.0, 10.0}) {
        cmatrix com = averaged_state(1.0, tau, defaults, topology::com);
        cmatrix bip = averaged_state(1.0, tau, defaults, topology::bip);
        cmatrix tri = averaged_state(1.0, tau, defaults, topology::tri);
        double cb = frobenius_dist(com, bip);
        double ct = frobenius_dist(com, tri);
        double bt = frobenius_dist(bip, tri);
        CHECK(cb > 1e-3);
        CHECK(ct > 1e-3);
        CHECK(bt > 1e-3);
        CHECK(cb > prev_cb);
        CHECK(ct > prev_ct);
        CHECK(bt > prev_bt);
        prev_cb = cb;
        prev_ct = ct;
        prev_bt = bt;
    }
}

TEST_CASE("quadrature engine agrees with the exact average") {
    cmatrix exact = averaged_state(1.0, 2.0, defaults, topology::com);
    cmatrix gh = averaged_state_gh(1.0, 2.0, defaults, topology::com, 32);
    CHECK(frobenius_dist(exact, gh) < 1e-10);
    CHECK_THROWS_AS(averaged_state_gh(1.0, 2.0, defaults, topology::com, 1), std::invalid_argument);
}

TEST_CASE("a two node rule is visibly wrong at strong damping") {
    power_law_params strong(1e-1, 3.0);
    cmatrix coarse = averaged_state_gh(1.0, 50.0, strong, topology::com, 2);
    cmatrix fine = averaged_state_gh(1.0, 50.0, strong, topology::com, 64);
    CHECK(frobenius_dist(coarse, fine) > 1e-3);
}

TEST_CASE("sampling engine converges at monte carlo rate") {
    cmatrix exact = averaged_state(1.0, 2.0, defaults, topology::com);
    cmatrix mc = averaged_state_mc(1.0, 2.0, defaults, topology::com, 20000, 7);
    CHECK(frobenius_dist(exact, mc) < 2e-2);
    CHECK_THROWS_AS(averaged_state_mc(1.0, 2.0, defaults, topology::com, 0, 7), std::invalid_argument);
}

TEST_CASE("sampling engine is bitwise reproducible across worker counts") {
    for (topology topo : {topology::com, topology::bip, topology::tri}) {
        cmatrix one = averaged_state_mc(1.0, 2.0, defaults, topo, 20000, 42, 1);
        cmatrix three = averaged_state_mc(1.0, 2.0, defaults, topo, 20000, 42, 3);
        REQUIRE(one.a.size() == three.a.size());
        for (std::size_t i = 0; i < one.a.size(); ++i) CHECK(one.a[i] == three.a[i]);
    }
}

}  // TEST_SUITE
