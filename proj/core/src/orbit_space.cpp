#include "orbitmult/orbit_space.hpp"

#include <cmath>

#include "orbitmult/oracle.hpp"

namespace orbitmult {

HermitianMatrix cross_product(const ComplexVector& z, const ComplexVector& w) {
    if (z.size() != w.size())
        throw LengthMismatchError(z.size(), w.size());
    const std::size_t n = z.size();
    HermitianMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s(i, j) = 0.5 * (w[i] * std::conj(z[j]) + z[i] * std::conj(w[j]));
    return s;
}

HermitianMatrix moment_map(const ComplexVector& z) { return cross_product(z, z); }

GroupElement group_multiply(const GroupElement& a, const GroupElement& b) {
    if (a.k.n() != b.k.n() || a.z.size() != b.z.size() || a.k.n() != a.z.size())
        throw DimensionMismatchError("group element sizes differ");
    GroupElement out;
    out.k = a.k * b.k;
    const ComplexVector kbz = a.k * b.z;
    out.z = a.z + kbz;
    out.t = a.t + b.t - 0.5 * inner(a.z, kbz).imag();
    return out;
}

LinearForm coadjoint_action(const GroupElement& g, const LinearForm& phi) {
    const std::size_t n = phi.S.n();
    if (g.k.n() != n || g.z.size() != n || phi.u.size() != n)
        throw DimensionMismatchError("group element / form sizes differ");
    LinearForm out;
    const ComplexVector ku = g.k * phi.u;
    out.S = conjugate_by(g.k, phi.S);
    out.S += cross_product(g.z, ku);
    out.S += (phi.x / 2.0) * rank_one(g.z);
    out.u = ku + (Complex(phi.x) * g.z);
    out.x = phi.x;
    return out;
}

OrbitInvariant generic_orbit_invariant(const LinearForm& phi) {
    if (phi.x == 0.0)
        throw ZeroCentralParameterError();
    CMatrix m = phi.S;
    m -= (1.0 / (2.0 * phi.x)) * rank_one(phi.u);
    OrbitInvariant inv;
    inv.spectrum = hermitian_eigenvalues(m);
    inv.x = phi.x;
    return inv;
}

bool k_orbit_contains(const HermitianMatrix& s, const DominantWeight& mu, double tol) {
    if (s.n() != mu.size())
        throw DimensionMismatchError("matrix size does not match weight length");
    const std::vector<double> spec = hermitian_eigenvalues(s);
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (std::abs(spec[i] - static_cast<double>(mu[i])) > tol)
            return false;
    return true;
}

} // namespace orbitmult
