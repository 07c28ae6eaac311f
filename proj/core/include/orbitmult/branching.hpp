#pragma once

#include <span>
#include <utility>
#include <vector>

#include "orbitmult/cg_solver.hpp"
#include "orbitmult/weights.hpp"

namespace orbitmult {

// Which K-types the Fock factor contributes. PaperFock keeps the types
// (0,...,0,-k) for every sign of alpha, which is what every displayed
// decomposition uses; ConjugateFock switches to (k,0,...,0) when alpha < 0,
// the variant suggested by the antiholomorphic model.
enum class Convention { PaperFock, ConjugateFock };

enum class AlphaSign { Positive, Negative };

AlphaSign sign_of_alpha(const Rational& alpha); // throws ZeroAlphaError

// Constituents of tau_lambda (x) tau_(0,...,0,-k): all nu obtained by
// removing a horizontal strip of size k, i.e. interlaces_below(lambda, nu)
// with sum(lambda - nu) = k. Multiplicity free; lexicographically
// descending; never empty (the last row absorbs any budget).
std::vector<DominantWeight> tensor_with_dual_sym(const DominantWeight& lambda, unsigned k);

// Constituents of tau_lambda (x) tau_(k,0,...,0): horizontal strips added.
std::vector<DominantWeight> tensor_with_sym(const DominantWeight& lambda, unsigned k);

// Closed-form multiplicity of tau_mu in tau_lambda (x) W_alpha: 0 or 1,
// decided by the interlacing test picked by (sign, convention). The strip
// size is forced by sum(lambda - mu), so no type occurs twice.
int branching_multiplicity(const DominantWeight& lambda, const DominantWeight& mu,
                           AlphaSign sign, Convention convention = Convention::PaperFock);

struct BranchingRow {
    unsigned k = 0;
    std::vector<DominantWeight> constituents;
};

struct BranchingTable {
    DominantWeight lambda;
    AlphaSign alpha_sign;
    Convention convention;
    std::vector<BranchingRow> rows; // k = 0 .. k_max
};

BranchingTable branch_table(const DominantWeight& lambda, AlphaSign sign,
                            Convention convention, unsigned k_max);

struct CompareRow {
    DominantWeight mu;
    Multiplicity n = Multiplicity::finite(0);
    int m = 0;
    bool agree_nonvanishing = false; // m != 0 implies n != 0
};

// Side-by-side orbit multiplicity and branching multiplicity for a set of
// targets. Rows keep the order of mu_set.
std::vector<CompareRow> compare_n_m(const DominantWeight& lambda, const Rational& alpha,
                                    std::span<const DominantWeight> mu_set,
                                    Convention convention = Convention::PaperFock);

// Trace identity of the degree-k Fock layer: returns
//   (h_k evaluated at e^{-i theta_j}, Weyl character of (0,...,0,-k) at
//    diag(e^{i theta_j})),
// which must agree. Both sides are evaluated at a common slightly perturbed
// phase vector when the Weyl denominator is near zero; throws
// DegeneratePhasesError if even the perturbed alternant collapses.
std::pair<Complex, Complex> fock_character_check(std::size_t n, unsigned k,
                                                 std::span<const double> phases);

} // namespace orbitmult
