#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "ghzsim/gauss_hermite.hpp"

using namespace ghzsim;

namespace {

double moment(const gh_rule& rule, int power) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * std::pow(rule.nodes[i], power);
    }
    return acc;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("rejects degenerate orders") {
    CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite(1), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite(-4), std::invalid_argument);
}

TEST_CASE("five point rule against published values") {
    gh_rule rule = gauss_hermite(5);
    REQUIRE(rule.nodes.size() == 5);
    REQUIRE(rule.weights.size() == 5);
    CHECK(rule.nodes[0] == doctest::Approx(-2.020182870456086).epsilon(1e-12));
    CHECK(rule.nodes[1] == doctest::Approx(-0.958572464613819).epsilon(1e-12));
    CHECK(rule.nodes[2] == 0.0);
    CHECK(rule.nodes[3] == doctest::Approx(0.958572464613819).epsilon(1e-12));
    CHECK(rule.nodes[4] == doctest::Approx(2.020182870456086).epsilon(1e-12));
    CHECK(rule.weights[0] == doctest::Approx(0.019953242059046).epsilon(1e-11));
    CHECK(rule.weights[1] == doctest::Approx(0.393619323152241).epsilon(1e-11));
    CHECK(rule.weights[2] == doctest::Approx(0.945308720482942).epsilon(1e-11));
}

TEST_CASE("weights are positive and sum to sqrt(pi)") {
    for (int n : {2, 5, 16, 64}) {
        gh_rule rule = gauss_hermite(n);
        double sum = 0.0;
        for (double w : rule.weights) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(sum == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    }
}

TEST_CASE("nodes are ascending and symmetric") {
    for (int n : {2, 5, 16, 33, 64}) {
        gh_rule rule = gauss_hermite(n);
        for (std::size_t i = 1; i < rule.nodes.size(); ++i) {
            CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        }
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            std::size_t j = rule.nodes.size() - 1 - i;
            CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[j]).epsilon(1e-13));
            CHECK(rule.weights[i] == doctest::Approx(rule.weights[j]).epsilon(1e-13));
        }
        if (n % 2 == 1) CHECK(rule.nodes[n / 2] == 0.0);
    }
}

TEST_CASE("gaussian moments") {
    const double root_pi = std::sqrt(std::numbers::pi);
    gh_rule rule = gauss_hermite(8);
    CHECK(moment(rule, 1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(moment(rule, 2) == doctest::Approx(root_pi / 2.0).epsilon(1e-13));
    CHECK(moment(rule, 4) == doctest::Approx(3.0 * root_pi / 4.0).epsilon(1e-13));

    // a 4-point rule integrates polynomials up to degree 7 exactly
    gh_rule small = gauss_hermite(4);
    CHECK(moment(small, 6) == doctest::Approx(15.0 * root_pi / 8.0).epsilon(1e-12));
}

TEST_CASE("characteristic function benchmark integral") {
    // integral of exp(-x^2) cos(2 sqrt(2 beta) x) / sqrt(pi) = exp(-2 beta)
    const double beta = 0.7;
    gh_rule rule = gauss_hermite(32);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * std::cos(2.0 * std::sqrt(2.0 * beta) * rule.nodes[i]);
    }
    acc /= std::sqrt(std::numbers::pi);
    CHECK(acc == doctest::Approx(std::exp(-2.0 * beta)).epsilon(1e-13));
}

}  // TEST_SUITE
