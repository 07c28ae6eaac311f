#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitmult/cmatrix.hpp"
#include "orbitmult/rational.hpp"
#include "orbitmult/weights.hpp"

namespace orbitmult {

// Value in N union {infinity}. Every multiplicity this solver produces is
// Finite(0) or Finite(1); the infinite variant exists for interface
// completeness only.
class Multiplicity {
public:
    static Multiplicity finite(std::uint64_t v) { return Multiplicity(false, v); }
    static Multiplicity infinite() { return Multiplicity(true, 0); }

    bool is_infinite() const { return infinite_; }
    std::uint64_t value() const { return value_; }
    bool nonzero() const { return infinite_ || value_ != 0; }

    bool operator==(const Multiplicity&) const = default;

private:
    Multiplicity(bool inf, std::uint64_t v) : infinite_(inf), value_(v) {}
    bool infinite_;
    std::uint64_t value_;
};

enum class SolverPath { Theorem3System, Theorem4Scalar, GeneralGrouped };

const char* to_string(SolverPath path);

// One nonzero coordinate of a certified witness: z_index = sqrt(radicand),
// radicand a nonnegative rational kept exact until the oracle boundary.
struct WitnessEntry {
    Rational radicand;
    std::size_t index;

    bool operator==(const WitnessEntry&) const = default;
};

struct CGResult {
    Multiplicity multiplicity = Multiplicity::finite(0);
    // Present iff multiplicity == 1: one exact norm per lambda group.
    std::optional<std::vector<Rational>> group_norms;
    // Present iff multiplicity == 1: sqrt(c_t) placed on the first
    // coordinate of group t, zeros elsewhere.
    std::optional<std::vector<WitnessEntry>> witness;
    SolverPath path = SolverPath::GeneralGrouped;
    std::string diagnostics;
};

struct PaperSystem {
    std::vector<std::vector<Integer>> B; // B_ij = prod_{k != j} (mu_i - lambda_k)
    std::vector<Integer> V;              // V_i  = prod_k (mu_i - lambda_k)
};

// Exact matrix/vector attached to a pair of dominant weights. Throws
// LengthMismatchError.
PaperSystem paper_system(const DominantWeight& lambda, const DominantWeight& mu);

// Exact determinant of B (fraction-free elimination).
Integer paper_system_determinant(const PaperSystem& sys);

// Solves (alpha/2) B c = V exactly; nullopt when B is singular. This is the
// linear-system route; cg_multiplicity itself always goes through the
// grouped candidate below, and the two must agree whenever both apply.
std::optional<std::vector<Rational>> solve_paper_system(const DominantWeight& lambda,
                                                        const DominantWeight& mu,
                                                        const Rational& alpha);

// Unique candidate for the group norms c_t = sum_{j in group t} |z_j|^2:
//   step 1: mu must contain each distinct lambda value with multiplicity
//           >= (group multiplicity - 1), else nullopt;
//   step 2: with R = mu minus those forced entries (|R| = #groups),
//           c_t = -(2/alpha) prod_{r in R}(lv_t - r) / prod_{s != t}(lv_t - lv_s).
// Entries may be negative; the caller decides feasibility. Throws
// ZeroAlphaError, LengthMismatchError.
std::optional<std::vector<Rational>> solve_group_norms(const DominantWeight& lambda,
                                                       const DominantWeight& mu,
                                                       const Rational& alpha);

// The Corwin-Greenleaf multiplicity with certificate: 1 iff the candidate
// exists and is entrywise >= 0 (the fiber is then a single product of
// spheres, one orbit of the stabilizer of diag(lambda)); 0 otherwise.
CGResult cg_multiplicity(const DominantWeight& lambda, const Rational& alpha,
                         const DominantWeight& mu);

// Floating witness vector, or nullopt when the multiplicity is 0.
std::optional<ComplexVector> witness(const DominantWeight& lambda, const Rational& alpha,
                                     const DominantWeight& mu);

// Dense floating expansion of an exact witness.
ComplexVector witness_vector(std::span<const WitnessEntry> entries, std::size_t n);

// Evaluates the secular polynomial
//   P(x) = prod_i (x - lambda_i) - (alpha/2) sum_t c_t (x - lv_t)^{n_t - 1}
//          prod_{s != t} (x - lv_s)^{n_s}
// exactly at every mu_k; true iff all values vanish. Root membership is
// necessary but not sufficient, so this is a diagnostic only.
bool paper_necessary_condition(const DominantWeight& lambda, const Rational& alpha,
                               const DominantWeight& mu, std::span<const Rational> c);

// Literal classification of the scalar case lambda = (a, ..., a):
//   alpha > 0: mu = (b,..,b,a,..,a), p,q >= 1, b > a;
//   alpha < 0: mu = (a,..,a,b,..,b), p,q >= 1, b < a.
// Ground truth remains cg_multiplicity; rows where the two disagree are
// surfaced by the compare command. Throws NotScalarLambdaError.
bool theorem4_paper_form(const DominantWeight& lambda, const Rational& alpha,
                         const DominantWeight& mu);

} // namespace orbitmult
