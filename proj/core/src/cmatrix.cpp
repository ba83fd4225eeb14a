#include "ghzsim/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ghzsim {

cmatrix cmatrix::identity(std::size_t n) {
    cmatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

cmatrix cmatrix::zero(std::size_t r, std::size_t c) { return cmatrix(r, c); }

static void check_same_shape(const cmatrix& x, const cmatrix& y, const char* what) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

cmatrix operator+(const cmatrix& x, const cmatrix& y) {
    check_same_shape(x, y, "operator+");
    cmatrix r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

cmatrix operator-(const cmatrix& x, const cmatrix& y) {
    check_same_shape(x, y, "operator-");
    cmatrix r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

cmatrix operator*(cdouble s, const cmatrix& x) {
    cmatrix r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = s * x.a[i];
    return r;
}

cmatrix mat_mul(const cmatrix& x, const cmatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    cmatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const cdouble xik = x(i, k);
            if (xik == cdouble{}) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

cmatrix mat_dagger(const cmatrix& x) {
    cmatrix r(x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r(j, i) = std::conj(x(i, j));
    return r;
}

cdouble mat_trace(const cmatrix& x) {
    if (x.rows != x.cols) throw std::invalid_argument("mat_trace: matrix must be square");
    cdouble t = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) t += x(i, i);
    return t;
}

double frobenius_dist(const cmatrix& x, const cmatrix& y) {
    check_same_shape(x, y, "frobenius_dist");
    double s = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) s += std::norm(x.a[i] - y.a[i]);
    return std::sqrt(s);
}

cmatrix kron(const cmatrix& x, const cmatrix& y) {
    cmatrix r(x.rows * y.rows, x.cols * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            const cdouble xij = x(i, j);
            for (std::size_t k = 0; k < y.rows; ++k)
                for (std::size_t l = 0; l < y.cols; ++l)
                    r(i * y.rows + k, j * y.cols + l) = xij * y(k, l);
        }
    return r;
}

bool is_hermitian(const cmatrix& x, double tol) {
    if (x.rows != x.cols) return false;
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = i; j < x.cols; ++j)
            if (std::abs(x(i, j) - std::conj(x(j, i))) > tol) return false;
    return true;
}

cmatrix partial_transpose(const cmatrix& rho, int qubit) {
    if (rho.rows != 8 || rho.cols != 8)
        throw std::invalid_argument("partial_transpose: state must be 8x8");
    if (qubit < 0 || qubit > 2)
        throw std::invalid_argument("partial_transpose: qubit index must be 0, 1 or 2");
    const int shift = 2 - qubit;
    cmatrix r(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const std::size_t ib = (i >> shift) & 1, jb = (j >> shift) & 1;
            const std::size_t i2 = (i & ~(std::size_t{1} << shift)) | (jb << shift);
            const std::size_t j2 = (j & ~(std::size_t{1} << shift)) | (ib << shift);
            r(i2, j2) = rho(i, j);
        }
    return r;
}

std::vector<double> hermitian_eigenvalues(const cmatrix& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
    if (!is_hermitian(m, 1e-10))
        throw std::invalid_argument("hermitian_eigenvalues: matrix must be Hermitian");
    const std::size_t n = m.rows;

    // work on the exactly Hermitian part so rotations stay consistent
    cmatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cdouble v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
        if (std::sqrt(off) < 1e-13) {
            std::vector<double> ev(n);
            for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
            std::sort(ev.begin(), ev.end(), std::greater<double>());
            return ev;
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble apq = a(p, q);
                const double abs_pq = std::abs(apq);
                if (abs_pq < 1e-300) continue;
                const cdouble w = apq / abs_pq;
                const double app = a(p, p).real(), aqq = a(q, q).real();
                const double zeta = (aqq - app) / (2.0 * abs_pq);
                const double t =
                    (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // columns, then rows, of the plane rotation that zeroes a(p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(w) * akq;
                    a(k, q) = s * akp + c * std::conj(w) * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * w * aqk;
                    a(q, k) = s * apk + c * w * aqk;
                }
            }
    }
    throw std::runtime_error("hermitian_eigenvalues: no convergence within 100 sweeps");
}

}  // namespace ghzsim
