#include "orbitmult/branching.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>

#include "orbitmult/cmatrix.hpp"

namespace orbitmult {

AlphaSign sign_of_alpha(const Rational& alpha) {
    if (alpha == 0)
        throw ZeroAlphaError();
    return alpha > 0 ? AlphaSign::Positive : AlphaSign::Negative;
}

std::vector<DominantWeight> tensor_with_dual_sym(const DominantWeight& lambda, unsigned k) {
    const std::size_t n = lambda.size();
    std::vector<DominantWeight> out;
    std::vector<long long> nu(n);

    // rows 0..n-2 remove at most (lambda_i - lambda_{i+1}) each; the last
    // row absorbs whatever budget is left, so the strip always closes
    const std::function<void(std::size_t, long long)> walk = [&](std::size_t i, long long left) {
        if (i + 1 == n) {
            nu[i] = lambda[i] - left;
            out.push_back(DominantWeight(nu));
            return;
        }
        const long long low = std::max(lambda[i + 1], lambda[i] - left);
        for (long long v = lambda[i]; v >= low; --v) {
            nu[i] = v;
            walk(i + 1, left - (lambda[i] - v));
        }
    };
    walk(0, static_cast<long long>(k));
    // the depth-first order above is already lexicographically descending
    assert(std::is_sorted(out.begin(), out.end(),
                          [](const DominantWeight& a, const DominantWeight& b) { return b < a; }));
    return out;
}

std::vector<DominantWeight> tensor_with_sym(const DominantWeight& lambda, unsigned k) {
    const std::size_t n = lambda.size();
    std::vector<DominantWeight> out;
    std::vector<long long> nu(n);

    // mirrored strip: rows 1..n-1 add at most (lambda_{i-1} - lambda_i),
    // row 0 is unbounded above and absorbs the rest
    const std::function<void(std::size_t, long long)> walk = [&](std::size_t i, long long left) {
        if (i == 0) {
            nu[0] = lambda[0] + left;
            out.push_back(DominantWeight(nu));
            return;
        }
        const long long high = std::min(lambda[i - 1], lambda[i] + left);
        for (long long v = lambda[i]; v <= high; ++v) {
            nu[i] = v;
            walk(i - 1, left - (v - lambda[i]));
        }
    };
    walk(n - 1, static_cast<long long>(k));
    std::sort(out.begin(), out.end(), [](const DominantWeight& a, const DominantWeight& b) {
        return b < a;
    });
    return out;
}

int branching_multiplicity(const DominantWeight& lambda, const DominantWeight& mu,
                           AlphaSign sign, Convention convention) {
    if (lambda.size() != mu.size())
        throw LengthMismatchError(lambda.size(), mu.size());
    if (convention == Convention::ConjugateFock && sign == AlphaSign::Negative)
        return interlaces_below(mu, lambda) ? 1 : 0;
    return interlaces_below(lambda, mu) ? 1 : 0;
}

BranchingTable branch_table(const DominantWeight& lambda, AlphaSign sign,
                            Convention convention, unsigned k_max) {
    const bool conjugate = convention == Convention::ConjugateFock && sign == AlphaSign::Negative;
    BranchingTable table{lambda, sign, convention, {}};
    table.rows.reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) {
        BranchingRow row;
        row.k = k;
        row.constituents = conjugate ? tensor_with_sym(lambda, k) : tensor_with_dual_sym(lambda, k);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<CompareRow> compare_n_m(const DominantWeight& lambda, const Rational& alpha,
                                    std::span<const DominantWeight> mu_set,
                                    Convention convention) {
    const AlphaSign sign = sign_of_alpha(alpha);
    std::vector<CompareRow> rows;
    rows.reserve(mu_set.size());
    for (const DominantWeight& mu : mu_set) {
        CompareRow row{mu};
        row.n = cg_multiplicity(lambda, alpha, mu).multiplicity;
        row.m = branching_multiplicity(lambda, mu, sign, convention);
        row.agree_nonvanishing = row.m == 0 || row.n.nonzero();
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

// det(x_j^{e_i}) with x_j = exp(i theta_j); |x| = 1 so powers go through
// the exponential directly.
Complex alternant(std::span<const double> theta, std::span<const long long> exponents) {
    const std::size_t n = theta.size();
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = std::exp(Complex(0.0, theta[j] * static_cast<double>(exponents[i])));
    return determinant(std::move(m));
}

Complex complete_homogeneous(std::span<const double> theta, unsigned k) {
    // trace of diag(e^{i theta}) acting by p -> p(A^{-1} z) on degree-k
    // monomials: sum over exponent vectors of e^{-i <m, theta>}
    Complex acc = 0.0;
    const std::size_t n = theta.size();
    const std::function<void(std::size_t, unsigned, double)> walk = [&](std::size_t j,
                                                                        unsigned left,
                                                                        double angle) {
        if (j + 1 == n) {
            acc += std::exp(Complex(0.0, angle - theta[j] * static_cast<double>(left)));
            return;
        }
        for (unsigned take = 0; take <= left; ++take)
            walk(j + 1, left - take, angle - theta[j] * static_cast<double>(take));
    };
    walk(0, k, 0.0);
    return acc;
}

} // namespace

std::pair<Complex, Complex> fock_character_check(std::size_t n, unsigned k,
                                                 std::span<const double> phases) {
    assert(n >= 1);
    if (phases.size() != n)
        throw LengthMismatchError(phases.size(), n);

    std::vector<double> theta(phases.begin(), phases.end());
    std::vector<long long> staircase(n);
    for (std::size_t i = 0; i < n; ++i) staircase[i] = static_cast<long long>(n - 1 - i);

    Complex denom = alternant(theta, staircase);
    if (std::abs(denom) < 1e-12) {
        // common perturbation, applied to both evaluations so the identity
        // being checked is untouched
        for (std::size_t j = 0; j < n; ++j) theta[j] += 0.05 * static_cast<double>(j + 1);
        denom = alternant(theta, staircase);
        if (std::abs(denom) < 1e-12)
            throw DegeneratePhasesError();
    }

    std::vector<long long> shifted = staircase; // nu_i + n - 1 - i with nu = (0,..,0,-k)
    shifted[n - 1] -= static_cast<long long>(k);
    const Complex character = alternant(theta, shifted) / denom;

    const Complex h_k = complete_homogeneous(theta, k);
    return {h_k, character};
}

} // namespace orbitmult
