#include "ghzsim/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ghzsim/gauss_hermite.hpp"

namespace ghzsim {

namespace {

inline int bit_of(std::size_t idx, int k) {
    return static_cast<int>((idx >> (2 - k)) & 1u);
}

// Fourier coefficients of u(a,b)*conj(u(c,d)) over modes n = -2, 0, +2,
// where u = cos(phi) I - i sin(phi) sigma_x; rows keyed by 2*(a!=b)+(c!=d)
constexpr double mode_triple[4][3] = {
    {0.25, 0.5, 0.25},
    {-0.25, 0.0, 0.25},
    {0.25, 0.0, -0.25},
    {-0.25, 0.5, -0.25},
};

struct sandwich_buf {
    std::array<cdouble, 64> u;
    std::array<cdouble, 64> t;
};

// acc += weight * U rho U^dagger with U = u(ph1) x u(ph2) x u(ph3);
// qubit 1 is the most significant bit, so ph1 pairs with bit mask 4
void accumulate_evolved(const std::array<cdouble, 64>& rho, double ph1,
                        double ph2, double ph3, double weight,
                        sandwich_buf& buf, std::array<cdouble, 64>& acc) {
    const double c1 = std::cos(ph1), s1 = std::sin(ph1);
    const double c2 = std::cos(ph2), s2 = std::sin(ph2);
    const double c3 = std::cos(ph3), s3 = std::sin(ph3);

    // entry (r,m) is (-i)^d times a cos/sin product, d the differing bits
    for (int r = 0; r < 8; ++r) {
        for (int m = 0; m < 8; ++m) {
            const unsigned x = static_cast<unsigned>(r ^ m);
            const double mag = ((x & 4u) ? s1 : c1) * ((x & 2u) ? s2 : c2) *
                               ((x & 1u) ? s3 : c3);
            switch (std::popcount(x)) {
                case 0: buf.u[8 * r + m] = cdouble(mag, 0.0); break;
                case 1: buf.u[8 * r + m] = cdouble(0.0, -mag); break;
                case 2: buf.u[8 * r + m] = cdouble(-mag, 0.0); break;
                default: buf.u[8 * r + m] = cdouble(0.0, mag); break;
            }
        }
    }

    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            cdouble sum = 0.0;
            for (int m = 0; m < 8; ++m) {
                sum += buf.u[8 * r + m] * rho[8 * m + c];
            }
            buf.t[8 * r + c] = sum;
        }
    }

    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            cdouble sum = 0.0;
            for (int m = 0; m < 8; ++m) {
                sum += buf.t[8 * r + m] * std::conj(buf.u[8 * c + m]);
            }
            acc[8 * r + c] += weight * sum;
        }
    }
}

std::array<cdouble, 64> to_array(const cmatrix& rho) {
    if (rho.rows != 8 || rho.cols != 8) {
        throw std::invalid_argument("dynamics: expected an 8x8 matrix");
    }
    std::array<cdouble, 64> out;
    std::copy(rho.a.begin(), rho.a.end(), out.begin());
    return out;
}

cmatrix from_array(const std::array<cdouble, 64>& a) {
    cmatrix out(8, 8);
    std::copy(a.begin(), a.end(), out.a.begin());
    return out;
}

void require_noisy(topology topo, const char* fn) {
    if (topo == topology::local) {
        throw std::invalid_argument(std::string(fn) +
                                    ": local topology carries no noise average");
    }
}

double beta_for(double tau, const power_law_params& noise, const char* fn) {
    if (tau < 0.0) {
        throw std::invalid_argument(std::string(fn) + ": tau must be non-negative");
    }
    return beta_closed(tau, noise);
}

}  // namespace

const char* topology_name(topology t) {
    switch (t) {
        case topology::com: return "com";
        case topology::bip: return "bip";
        case topology::tri: return "tri";
        case topology::local: return "local";
    }
    throw std::invalid_argument("topology_name: unknown topology");
}

topology topology_from_name(const std::string& name) {
    if (name == "com") return topology::com;
    if (name == "bip") return topology::bip;
    if (name == "tri") return topology::tri;
    if (name == "local") return topology::local;
    throw std::invalid_argument("topology_from_name: unknown topology '" + name + "'");
}

cmatrix initial_state(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("initial_state: p must lie in [0, 1]");
    }
    cmatrix rho = cmatrix::zero(8, 8);
    const double mix = (1.0 - p) / 8.0;
    for (std::size_t i = 0; i < 8; ++i) {
        rho(i, i) = mix;
    }
    rho(0, 0) += p / 2.0;
    rho(7, 7) += p / 2.0;
    rho(0, 7) = p / 2.0;
    rho(7, 0) = p / 2.0;
    return rho;
}

cmatrix single_qubit_unitary(double phase, double split_phase) {
    const cdouble global = std::exp(cdouble(0.0, -split_phase));
    cmatrix u(2, 2);
    u(0, 0) = u(1, 1) = global * std::cos(phase);
    u(0, 1) = u(1, 0) = global * cdouble(0.0, -std::sin(phase));
    return u;
}

cmatrix evolve_phases(const cmatrix& rho, double ph1, double ph2, double ph3) {
    const std::array<cdouble, 64> in = to_array(rho);
    std::array<cdouble, 64> acc{};
    sandwich_buf buf;
    accumulate_evolved(in, ph1, ph2, ph3, 1.0, buf, acc);
    return from_array(acc);
}

cmatrix evolve_local(double p, const local_field& fields, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("evolve_local: t must be non-negative");
    }
    const double split = fields.energy_split * t;
    const cmatrix u1 = single_qubit_unitary(fields.lambda * fields.delta_a * t, split);
    const cmatrix u2 = single_qubit_unitary(fields.lambda * fields.delta_b * t, split);
    const cmatrix u3 = single_qubit_unitary(fields.lambda * fields.delta_c * t, split);
    const cmatrix u = kron(kron(u1, u2), u3);
    return mat_mul(mat_mul(u, initial_state(p)), mat_dagger(u));
}

phase_poly element_poly(const cmatrix& rho, std::size_t row, std::size_t col) {
    if (rho.rows != 8 || rho.cols != 8) {
        throw std::invalid_argument("element_poly: expected an 8x8 matrix");
    }
    if (row > 7 || col > 7) {
        throw std::invalid_argument("element_poly: index out of range");
    }
    phase_poly poly;
    for (std::size_t m = 0; m < 8; ++m) {
        for (std::size_t n = 0; n < 8; ++n) {
            const cdouble x = rho(m, n);
            if (x == cdouble(0.0, 0.0)) {
                continue;
            }
            const double* t1 =
                mode_triple[2 * (bit_of(row, 0) != bit_of(m, 0)) + (bit_of(col, 0) != bit_of(n, 0))];
            const double* t2 =
                mode_triple[2 * (bit_of(row, 1) != bit_of(m, 1)) + (bit_of(col, 1) != bit_of(n, 1))];
            const double* t3 =
                mode_triple[2 * (bit_of(row, 2) != bit_of(m, 2)) + (bit_of(col, 2) != bit_of(n, 2))];
            for (int i1 = 0; i1 < 3; ++i1) {
                if (t1[i1] == 0.0) continue;
                for (int i2 = 0; i2 < 3; ++i2) {
                    const double w12 = t1[i1] * t2[i2];
                    if (w12 == 0.0) continue;
                    for (int i3 = 0; i3 < 3; ++i3) {
                        if (t3[i3] == 0.0) continue;
                        poly.c[9 * i1 + 3 * i2 + i3] += x * (w12 * t3[i3]);
                    }
                }
            }
        }
    }
    return poly;
}

cdouble poly_eval(const phase_poly& poly, double ph1, double ph2, double ph3) {
    cdouble sum = 0.0;
    for (int i1 = 0; i1 < 3; ++i1) {
        for (int i2 = 0; i2 < 3; ++i2) {
            for (int i3 = 0; i3 < 3; ++i3) {
                const cdouble c = poly.c[9 * i1 + 3 * i2 + i3];
                if (c == cdouble(0.0, 0.0)) continue;
                const double arg = 2.0 * (i1 - 1) * ph1 + 2.0 * (i2 - 1) * ph2 +
                                   2.0 * (i3 - 1) * ph3;
                sum += c * std::exp(cdouble(0.0, arg));
            }
        }
    }
    return sum;
}

cmatrix averaged_state(double p, double tau, const power_law_params& noise,
                       topology topo) {
    require_noisy(topo, "averaged_state");
    const double beta = beta_for(tau, noise, "averaged_state");

    // characteristic factor per exponent triple, contracted by topology
    std::array<double, 27> cf;
    for (int i1 = 0; i1 < 3; ++i1) {
        for (int i2 = 0; i2 < 3; ++i2) {
            for (int i3 = 0; i3 < 3; ++i3) {
                const int n1 = 2 * (i1 - 1);
                const int n2 = 2 * (i2 - 1);
                const int n3 = 2 * (i3 - 1);
                double f = 0.0;
                switch (topo) {
                    case topology::com:
                        f = char_fn(n1 + n2 + n3, beta);
                        break;
                    case topology::bip:
                        f = char_fn(n1 + n2, beta) * char_fn(n3, beta);
                        break;
                    default:
                        f = char_fn(n1, beta) * char_fn(n2, beta) * char_fn(n3, beta);
                        break;
                }
                cf[static_cast<std::size_t>(9 * i1 + 3 * i2 + i3)] = f;
            }
        }
    }

    const cmatrix rho0 = initial_state(p);
    cmatrix out = cmatrix::zero(8, 8);
    for (std::size_t row = 0; row < 8; ++row) {
        for (std::size_t col = row; col < 8; ++col) {
            const phase_poly poly = element_poly(rho0, row, col);
            cdouble v = 0.0;
            for (std::size_t k = 0; k < 27; ++k) {
                v += poly.c[k] * cf[k];
            }
            if (row == col) {
                out(row, col) = v.real();
            } else {
                out(row, col) = v;
                out(col, row) = std::conj(v);
            }
        }
    }
    return out;
}

cmatrix averaged_state_gh(double p, double tau, const power_law_params& noise,
                          topology topo, int nodes) {
    require_noisy(topo, "averaged_state_gh");
    if (nodes < 2) {
        throw std::invalid_argument("averaged_state_gh: need at least 2 nodes");
    }
    const double beta = beta_for(tau, noise, "averaged_state_gh");
    const gh_rule rule = gauss_hermite(nodes);
    const double scale = std::sqrt(2.0 * beta);
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);

    const std::array<cdouble, 64> rho0 = to_array(initial_state(p));
    std::array<cdouble, 64> acc{};
    sandwich_buf buf;
    const std::size_t n = static_cast<std::size_t>(nodes);

    switch (topo) {
        case topology::com:
            for (std::size_t i = 0; i < n; ++i) {
                const double phi = scale * rule.nodes[i];
                accumulate_evolved(rho0, phi, phi, phi,
                                   rule.weights[i] * inv_sqrt_pi, buf, acc);
            }
            break;
        case topology::bip:
            for (std::size_t i = 0; i < n; ++i) {
                const double pair_phi = scale * rule.nodes[i];
                const double wi = rule.weights[i] * inv_sqrt_pi;
                for (std::size_t j = 0; j < n; ++j) {
                    accumulate_evolved(rho0, pair_phi, pair_phi,
                                       scale * rule.nodes[j],
                                       wi * rule.weights[j] * inv_sqrt_pi, buf, acc);
                }
            }
            break;
        default:
            for (std::size_t i = 0; i < n; ++i) {
                const double phi1 = scale * rule.nodes[i];
                const double wi = rule.weights[i] * inv_sqrt_pi;
                for (std::size_t j = 0; j < n; ++j) {
                    const double phi2 = scale * rule.nodes[j];
                    const double wij = wi * rule.weights[j] * inv_sqrt_pi;
                    for (std::size_t k = 0; k < n; ++k) {
                        accumulate_evolved(rho0, phi1, phi2,
                                           scale * rule.nodes[k],
                                           wij * rule.weights[k] * inv_sqrt_pi,
                                           buf, acc);
                    }
                }
            }
            break;
    }
    return from_array(acc);
}

cmatrix averaged_state_mc(double p, double tau, const power_law_params& noise,
                          topology topo, long long samples, std::uint64_t seed,
                          int workers) {
    require_noisy(topo, "averaged_state_mc");
    if (samples < 1) {
        throw std::invalid_argument("averaged_state_mc: need at least 1 sample");
    }
    const double beta = beta_for(tau, noise, "averaged_state_mc");
    const std::array<cdouble, 64> rho0 = to_array(initial_state(p));

    constexpr long long chunk_size = 8192;
    const long long nchunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<std::array<cdouble, 64>> slots(static_cast<std::size_t>(nchunks));
    std::atomic<long long> next{0};

    auto work = [&]() {
        sandwich_buf buf;
        for (;;) {
            const long long ci = next.fetch_add(1);
            if (ci >= nchunks) {
                break;
            }
            gaussian_stream gs(mix_seed(seed, static_cast<std::uint64_t>(ci)));
            auto& acc = slots[static_cast<std::size_t>(ci)];
            acc.fill(cdouble(0.0, 0.0));
            const long long lo = ci * chunk_size;
            const long long hi = std::min(samples, lo + chunk_size);
            for (long long s = lo; s < hi; ++s) {
                double ph1 = 0.0, ph2 = 0.0, ph3 = 0.0;
                switch (topo) {
                    case topology::com:
                        ph1 = ph2 = ph3 = sample_phase(beta, gs);
                        break;
                    case topology::bip:
                        ph1 = ph2 = sample_phase(beta, gs);
                        ph3 = sample_phase(beta, gs);
                        break;
                    default:
                        ph1 = sample_phase(beta, gs);
                        ph2 = sample_phase(beta, gs);
                        ph3 = sample_phase(beta, gs);
                        break;
                }
                accumulate_evolved(rho0, ph1, ph2, ph3, 1.0, buf, acc);
            }
        }
    };

    int nworkers = workers > 0 ? workers
                               : static_cast<int>(std::thread::hardware_concurrency());
    if (nworkers < 1) {
        nworkers = 1;
    }
    nworkers = static_cast<int>(std::min<long long>(nworkers, nchunks));

    if (nworkers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        for (int i = 0; i < nworkers; ++i) {
            pool.emplace_back(work);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    // fixed ascending reduction keeps the result worker-count independent
    std::array<cdouble, 64> total{};
    for (long long ci = 0; ci < nchunks; ++ci) {
        const auto& acc = slots[static_cast<std::size_t>(ci)];
        for (std::size_t k = 0; k < 64; ++k) {
            total[k] += acc[k];
        }
    }
    const double inv = 1.0 / static_cast<double>(samples);
    for (auto& v : total) {
        v *= inv;
    }
    return from_array(total);
}

cmatrix permute_qubits(const cmatrix& rho, const std::array<int, 3>& perm) {
    if (rho.rows != 8 || rho.cols != 8) {
        throw std::invalid_argument("permute_qubits: expected an 8x8 matrix");
    }
    std::array<bool, 3> seen{false, false, false};
    for (int k : perm) {
        if (k < 0 || k > 2 || seen[static_cast<std::size_t>(k)]) {
            throw std::invalid_argument("permute_qubits: perm must rearrange {0,1,2}");
        }
        seen[static_cast<std::size_t>(k)] = true;
    }
    std::array<std::size_t, 8> map{};
    for (std::size_t r = 0; r < 8; ++r) {
        std::size_t old = 0;
        for (int k = 0; k < 3; ++k) {
            old |= static_cast<std::size_t>(bit_of(r, k)) << (2 - perm[static_cast<std::size_t>(k)]);
        }
        map[r] = old;
    }
    cmatrix out(8, 8);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            out(r, c) = rho(map[r], map[c]);
        }
    }
    return out;
}

}  // namespace ghzsim
