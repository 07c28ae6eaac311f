#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "orbitmult/errors.hpp"

namespace orbitmult {

using Complex = std::complex<double>;

// Column vector in C^n.
using ComplexVector = std::vector<Complex>;

// Dense square complex matrix, row major. Small n only; all loops are naive.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(std::span<const double> d);

    std::size_t n() const { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    CMatrix adjoint() const;
    double max_abs() const;
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(double s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(double s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

    ComplexVector operator*(const ComplexVector& v) const;

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

// Hermitian matrices are held in the same dense container; contracts that
// require hermiticity check it at the boundary.
using HermitianMatrix = CMatrix;

// z z* (rank at most one, positive semidefinite).
CMatrix rank_one(const ComplexVector& z);

// k S k*.
CMatrix conjugate_by(const CMatrix& k, const CMatrix& s);

// <a,b> = sum conj(a_i) b_i, antilinear in the first slot.
Complex inner(const ComplexVector& a, const ComplexVector& b);
double norm_sq(const ComplexVector& z);

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator*(Complex s, const ComplexVector& v);

// Determinant by LU with partial pivoting; used for character alternants.
Complex determinant(CMatrix m);

} // namespace orbitmult
