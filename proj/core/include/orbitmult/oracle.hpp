#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "orbitmult/cmatrix.hpp"
#include "orbitmult/weights.hpp"

namespace orbitmult {

struct OracleConfig {
    double tol = 1e-8;     // eigenvalue comparison tolerance, absolute
    int max_sweeps = 64;   // Jacobi sweep cap
    std::uint64_t seed = 0;
};

// Deterministic stream of uniforms and Box-Muller gaussians on top of
// mt19937_64. Uniform doubles are built from the top 53 bits of the raw
// output, so a fixed seed reproduces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }
    double uniform();          // [0, 1)
    double gaussian();         // standard normal
    Complex complex_gaussian();// E|g|^2 = 1

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Splitmix64-style mixing of (seed, index); used to hand independent
// deterministic streams to the cells of a scan.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct EigenSystem {
    std::vector<double> values; // sorted descending
    CMatrix vectors;            // columns, aligned with values
};

// Cyclic complex Jacobi. Input must be Hermitian within 1e-9 (relative to
// max(1, largest entry)); values come back sorted descending with stable
// ordering. Throws NotConvergedError after cfg.max_sweeps.
EigenSystem hermitian_eigensystem(const HermitianMatrix& m, const OracleConfig& cfg = {});

// Values-only fast path (no rotation accumulation).
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m, const OracleConfig& cfg = {});

// Gram-Schmidt on a complex gaussian matrix, re-orthogonalized once;
// columns are orthonormal within 1e-12.
CMatrix random_unitary(Rng& rng, std::size_t n);

// diag(lambda) as a complex matrix.
CMatrix weight_diagonal(const DominantWeight& lambda);

// True iff the sorted spectrum of diag(lambda) + (alpha/2) z z* matches mu
// entrywise within cfg.tol.
bool verify_membership(const DominantWeight& lambda, double alpha, const ComplexVector& z,
                       const DominantWeight& mu, const OracleConfig& cfg = {});

// Scans group-norm vectors on the exact rational grid that any solution
// must lie on (steps 2/(alpha * prod_{s != t}(lv_t - lv_s)) per group, total
// pinned by the trace), assigns random directions within each group, and
// returns the first z accepted by verify_membership. At most `budget`
// candidates are tried. Callers running scans derive per-cell seeds with
// derive_seed(cfg.seed, cell_index) to stay deterministic under concurrency.
std::optional<ComplexVector> randomized_search(const DominantWeight& lambda, double alpha,
                                               const DominantWeight& mu, std::uint64_t budget,
                                               const OracleConfig& cfg = {});

} // namespace orbitmult
