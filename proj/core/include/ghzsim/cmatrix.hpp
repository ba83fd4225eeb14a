#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ghzsim {

using cdouble = std::complex<double>;

// dense row-major complex matrix, sized for the 2x2..8x8 work in this library
struct cmatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cdouble> a;

    cmatrix() = default;
    cmatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    cdouble& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static cmatrix identity(std::size_t n);
    static cmatrix zero(std::size_t r, std::size_t c);
};

cmatrix operator+(const cmatrix& x, const cmatrix& y);
cmatrix operator-(const cmatrix& x, const cmatrix& y);
cmatrix operator*(cdouble s, const cmatrix& x);

cmatrix mat_mul(const cmatrix& x, const cmatrix& y);
cmatrix mat_dagger(const cmatrix& x);
cdouble mat_trace(const cmatrix& x);
double frobenius_dist(const cmatrix& x, const cmatrix& y);
cmatrix kron(const cmatrix& x, const cmatrix& y);

bool is_hermitian(const cmatrix& x, double tol);

// partial transpose of a three-qubit state over one qubit;
// basis |q1 q2 q3> with qubit 0 the most significant bit
cmatrix partial_transpose(const cmatrix& rho, int qubit);

// cyclic Jacobi with row-major upper-triangle sweep order, off-diagonal
// Frobenius norm threshold 1e-13, at most 100 sweeps; eigenvalues sorted
// descending
std::vector<double> hermitian_eigenvalues(const cmatrix& m);

}  // namespace ghzsim
