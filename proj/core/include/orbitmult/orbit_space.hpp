#pragma once

#include <vector>

#include "orbitmult/cmatrix.hpp"
#include "orbitmult/weights.hpp"

namespace orbitmult {

// Default tolerances for this module. Absolute, on matrices normalized by
// max(1, largest |entry|); fine for the desk-scale n <= 8 envelope.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kMembershipTol = 1e-8;

// A linear form (U, u, x) on k ltimes h_n, stored through the Hermitian
// representative S of the skew-Hermitian part: U = i S. Keeping S Hermitian
// makes orbit classification a sort of a real spectrum.
struct LinearForm {
    HermitianMatrix S;
    ComplexVector u;
    double x = 0.0;
};

// Group element (k, z, t) with k unitary.
struct GroupElement {
    CMatrix k;
    ComplexVector z;
    double t = 0.0;
};

// Hermitian representative of the cross product: S(z, w) = (w z* + z w*)/2,
// so that z x w = i S(z, w). Throws LengthMismatchError.
HermitianMatrix cross_product(const ComplexVector& z, const ComplexVector& w);

// Moment map of the U(n) action on C^n; equals cross_product(z, z) = z z*.
HermitianMatrix moment_map(const ComplexVector& z);

// Group law (k, z, t)(k', z', t') = (kk', z + kz', t + t' - Im<z, kz'>/2).
GroupElement group_multiply(const GroupElement& a, const GroupElement& b);

// Ad*(k,z,t)(S,u,x) = (kSk* + S(z, ku) + (x/2) z z*, ku + xz, x) in the
// Hermitian-representative convention. The x component is copied through
// untouched. Throws DimensionMismatchError.
LinearForm coadjoint_action(const GroupElement& g, const LinearForm& phi);

struct OrbitInvariant {
    std::vector<double> spectrum; // sorted descending
    double x = 0.0;
};

// Constant along the coadjoint orbit of a generic form: the sorted spectrum
// of S - (1/(2x)) u u* together with x. Throws ZeroCentralParameterError
// when x == 0.
OrbitInvariant generic_orbit_invariant(const LinearForm& phi);

// True iff sorted eigenvalues of S match mu entrywise within tol (U(n)
// adjoint orbits of Hermitian matrices are classified by sorted spectra).
bool k_orbit_contains(const HermitianMatrix& s, const DominantWeight& mu,
                      double tol = kMembershipTol);

} // namespace orbitmult
