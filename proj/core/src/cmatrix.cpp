#include "orbitmult/cmatrix.hpp"

#include <cmath>

namespace orbitmult {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const double> d) {
    CMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

double CMatrix::max_abs() const {
    double best = 0.0;
    for (const Complex& c : a_) best = std::max(best, std::abs(c));
    return best;
}

bool CMatrix::is_hermitian(double tol) const {
    const double scale = std::max(1.0, max_abs());
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol * scale)
                return false;
    return true;
}

bool CMatrix::is_unitary(double tol) const {
    const CMatrix prod = adjoint() * (*this);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const Complex want = i == j ? Complex(1.0) : Complex(0.0);
            if (std::abs(prod(i, j) - want) > tol)
                return false;
        }
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    if (other.n_ != n_)
        throw DimensionMismatchError("matrix sizes differ");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    if (other.n_ != n_)
        throw DimensionMismatchError("matrix sizes differ");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(double s) {
    for (Complex& c : a_) c *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_)
        throw DimensionMismatchError("matrix sizes differ");
    const std::size_t n = a.n_;
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0))
                continue;
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexVector CMatrix::operator*(const ComplexVector& v) const {
    if (v.size() != n_)
        throw DimensionMismatchError("matrix/vector sizes differ");
    ComplexVector out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

CMatrix rank_one(const ComplexVector& z) {
    CMatrix m(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j)
            m(i, j) = z[i] * std::conj(z[j]);
    return m;
}

CMatrix conjugate_by(const CMatrix& k, const CMatrix& s) { return k * s * k.adjoint(); }

Complex inner(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size())
        throw LengthMismatchError(a.size(), b.size());
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm_sq(const ComplexVector& z) {
    double acc = 0.0;
    for (const Complex& c : z) acc += std::norm(c);
    return acc;
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size())
        throw LengthMismatchError(a.size(), b.size());
    ComplexVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

ComplexVector operator*(Complex s, const ComplexVector& v) {
    ComplexVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Complex determinant(CMatrix m) {
    const std::size_t n = m.n();
    Complex det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(pivot, col)))
                pivot = r;
        if (std::abs(m(pivot, col)) == 0.0)
            return 0.0;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = m(r, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

} // namespace orbitmult
