#pragma once

#include <cstdint>
#include <random>

namespace ghzsim {

// power-law noise parameters; the closed beta form is singular at alpha == 2
struct power_law_params {
    double g;
    double alpha;
    power_law_params(double g_, double alpha_);
};

// autocorrelation kernel g(alpha-1)/2 * (1 + g*dt)^(-alpha)
double kernel(double dt, const power_law_params& par);

// accumulated phase variance [g*tau*(alpha-2) - 1 + (1+g*tau)^(2-alpha)] / ((alpha-2)*g),
// evaluated in a cancellation-free form
double beta_closed(double tau, const power_law_params& par);

// oracle for beta_closed: 2*integral_0^tau (tau-s)*kernel(s) ds by adaptive
// Simpson, absolute tolerance 1e-10, max depth 40
double beta_quadrature(double tau, const power_law_params& par);

// <exp(i*n*phi)> = exp(-n^2*beta/2) for phi ~ Normal(0, beta)
double char_fn(int n, double beta);

// deterministic standard-normal stream: Box-Muller over mt19937_64
class gaussian_stream {
  public:
    explicit gaussian_stream(std::uint64_t seed) : rng_(seed) {}
    double next();

  private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// one draw phi ~ Normal(0, beta)
double sample_phase(double beta, gaussian_stream& gs);

// splitmix64 of master + index, for decorrelated per-chunk sub-streams
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

}  // namespace ghzsim
