#include "ghzsim/gauss_hermite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ghzsim {

gh_rule gauss_hermite(int n) {
    if (n < 2) {
        throw std::invalid_argument("gauss_hermite: need at least 2 nodes");
    }

    constexpr double eps = 1e-14;
    constexpr int max_iter = 12;
    constexpr double pim4 = 0.7511255444649425;  // pi^(-1/4)

    gh_rule rule;
    rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
    rule.weights.assign(static_cast<std::size_t>(n), 0.0);

    const int m = (n + 1) / 2;
    double z = 0.0;

    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[1];
        } else {
            z = 2.0 * z - rule.nodes[static_cast<std::size_t>(i) - 2];
        }

        double pp = 0.0;
        int iter = 0;
        for (; iter < max_iter; ++iter) {
            // orthonormal Hermite recurrence keeps values O(1)
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= eps) {
                break;
            }
        }
        if (iter >= max_iter) {
            throw std::runtime_error("gauss_hermite: Newton iteration did not converge");
        }

        // roots come out largest first; store symmetric pair
        rule.nodes[static_cast<std::size_t>(i)] = z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = -z;
        const double w = 2.0 / (pp * pp);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }

    // odd n: middle node is exactly zero by symmetry
    if (n % 2 == 1) {
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    }

    std::reverse(rule.nodes.begin(), rule.nodes.end());
    std::reverse(rule.weights.begin(), rule.weights.end());
    return rule;
}

}  // namespace ghzsim
