#pragma once

#include <vector>

namespace ghzsim {

// nodes and weights for integral of exp(-x^2) * f(x) over the real line;
// nodes ascending, weights positive, sum of weights = sqrt(pi)
struct gh_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

gh_rule gauss_hermite(int n);

}  // namespace ghzsim
