#include "ghzsim/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ghzsim {

power_law_params::power_law_params(double g_, double alpha_) : g(g_), alpha(alpha_) {
    if (!(g > 0.0)) throw std::invalid_argument("power_law_params: g must be > 0");
    if (!(alpha > 1.0)) throw std::invalid_argument("power_law_params: alpha must be > 1");
    if (std::abs(alpha - 2.0) <= 1e-9)
        throw std::invalid_argument("power_law_params: alpha too close to 2, beta is undefined there");
}

double kernel(double dt, const power_law_params& par) {
    if (dt < 0.0) throw std::invalid_argument("kernel: dt must be >= 0");
    return 0.5 * par.g * (par.alpha - 1.0) * std::pow(1.0 + par.g * dt, -par.alpha);
}

double beta_closed(double tau, const power_law_params& par) {
    if (tau < 0.0) throw std::invalid_argument("beta_closed: tau must be >= 0");
    const double c = par.alpha - 2.0;
    const double x = par.g * tau;
    // c*x - 1 + (1+x)^(-c) written so the small-x cancellation never surfaces
    return (c * x + std::expm1(-c * std::log1p(x))) / (c * par.g);
}

namespace {

template <class F>
double simpson_adapt(const F& f, double a, double b, double fa, double fb, double fc, double s,
                     double tol, int depth) {
    const double c = 0.5 * (a + b);
    const double lm = 0.5 * (a + c), rm = 0.5 * (c + b);
    const double flm = f(lm), frm = f(rm);
    const double sl = (c - a) / 6.0 * (fa + 4.0 * flm + fc);
    const double sr = (b - c) / 6.0 * (fc + 4.0 * frm + fb);
    const double err = sl + sr - s;
    if (depth <= 0 || std::abs(err) <= 15.0 * tol) return sl + sr + err / 15.0;
    return simpson_adapt(f, a, c, fa, fc, flm, sl, 0.5 * tol, depth - 1) +
           simpson_adapt(f, c, b, fc, fb, frm, sr, 0.5 * tol, depth - 1);
}

}  // namespace

double beta_quadrature(double tau, const power_law_params& par) {
    if (tau < 0.0) throw std::invalid_argument("beta_quadrature: tau must be >= 0");
    if (tau == 0.0) return 0.0;
    const auto f = [&](double s) { return 2.0 * (tau - s) * kernel(s, par); };
    const double fa = f(0.0), fb = f(tau);
    const double mid = 0.5 * tau;
    const double fc = f(mid);
    const double s0 = tau / 6.0 * (fa + 4.0 * fc + fb);
    return simpson_adapt(f, 0.0, tau, fa, fb, fc, s0, 1e-10, 40);
}

double char_fn(int n, double beta) {
    return std::exp(-0.5 * static_cast<double>(n) * static_cast<double>(n) * beta);
}

double gaussian_stream::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1], u2 in [0, 1); 53-bit mantissas from the raw 64-bit words
    const double u1 = 1.0 - static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double w = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(w);
    have_spare_ = true;
    return r * std::cos(w);
}

double sample_phase(double beta, gaussian_stream& gs) {
    if (beta < 0.0) throw std::invalid_argument("sample_phase: beta must be >= 0");
    return std::sqrt(beta) * gs.next();
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace ghzsim
