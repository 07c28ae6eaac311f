#include "orbitmult/cg_solver.hpp"

#include <cassert>
#include <cmath>
#include <map>
#include <sstream>

namespace orbitmult {

const char* to_string(SolverPath path) {
    switch (path) {
        case SolverPath::Theorem3System: return "Theorem3System";
        case SolverPath::Theorem4Scalar: return "Theorem4Scalar";
        case SolverPath::GeneralGrouped: return "GeneralGrouped";
    }
    return "?";
}

PaperSystem paper_system(const DominantWeight& lambda, const DominantWeight& mu) {
    if (lambda.size() != mu.size())
        throw LengthMismatchError(lambda.size(), mu.size());
    const std::size_t n = lambda.size();
    PaperSystem sys;
    sys.B.assign(n, std::vector<Integer>(n));
    sys.V.assign(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
        Integer full = 1;
        for (std::size_t k = 0; k < n; ++k) full *= Integer(mu[i] - lambda[k]);
        sys.V[i] = full;
        for (std::size_t j = 0; j < n; ++j) {
            Integer prod = 1;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    prod *= Integer(mu[i] - lambda[k]);
            sys.B[i][j] = prod;
        }
    }
    return sys;
}

namespace {

// Gaussian elimination over exact rationals. Returns the determinant and,
// when rhs is non-null and the matrix is invertible, writes the solution.
Rational eliminate(std::vector<std::vector<Rational>> a, std::vector<Rational>* rhs,
                   std::vector<Rational>* solution) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            if (rhs)
                std::swap((*rhs)[pivot], (*rhs)[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0)
                continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            if (rhs)
                (*rhs)[r] -= f * (*rhs)[col];
        }
    }
    if (rhs && solution) {
        solution->assign(n, Rational(0));
        for (std::size_t i = n; i-- > 0;) {
            Rational acc = (*rhs)[i];
            for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * (*solution)[j];
            (*solution)[i] = acc / a[i][i];
        }
    }
    return det;
}

} // namespace

Integer paper_system_determinant(const PaperSystem& sys) {
    const std::size_t n = sys.B.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(sys.B[i][j]);
    const Rational det = eliminate(std::move(a), nullptr, nullptr);
    assert(denominator(det) == 1);
    return numerator(det);
}

std::optional<std::vector<Rational>> solve_paper_system(const DominantWeight& lambda,
                                                        const DominantWeight& mu,
                                                        const Rational& alpha) {
    if (alpha == 0)
        throw ZeroAlphaError();
    const PaperSystem sys = paper_system(lambda, mu);
    const std::size_t n = sys.B.size();
    const Rational half_alpha = alpha / 2;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = Rational(sys.V[i]);
        for (std::size_t j = 0; j < n; ++j) a[i][j] = half_alpha * Rational(sys.B[i][j]);
    }
    std::vector<Rational> solution;
    const Rational det = eliminate(std::move(a), &rhs, &solution);
    if (det == 0)
        return std::nullopt;
    return solution;
}

namespace {

struct ForcedSplit {
    bool ok = false;
    long long missing_value = 0;      // set when !ok
    std::size_t missing_needed = 0;
    std::size_t missing_found = 0;
    std::vector<long long> residual;  // |residual| = number of groups when ok
};

// Step 1 of the grouped solve: mu must contain each distinct lambda value
// with multiplicity at least (group size - 1); whatever remains of mu is the
// residual target spectrum for the monic degree-m factor.
ForcedSplit split_forced(const GroupedWeight& grouped, const DominantWeight& mu) {
    std::map<long long, std::size_t> counts;
    for (std::size_t i = 0; i < mu.size(); ++i) ++counts[mu[i]];

    ForcedSplit out;
    for (std::size_t t = 0; t < grouped.group_count(); ++t) {
        const std::size_t need = grouped.multiplicities[t] - 1;
        if (need == 0)
            continue;
        auto it = counts.find(grouped.values[t]);
        const std::size_t have = it == counts.end() ? 0 : it->second;
        if (have < need) {
            out.missing_value = grouped.values[t];
            out.missing_needed = need;
            out.missing_found = have;
            return out;
        }
        it->second -= need;
    }
    for (std::size_t i = 0; i < mu.size(); ++i) {
        auto it = counts.find(mu[i]);
        if (it->second > 0) {
            out.residual.push_back(mu[i]);
            --it->second;
        }
    }
    out.ok = true;
    return out;
}

} // namespace

std::optional<std::vector<Rational>> solve_group_norms(const DominantWeight& lambda,
                                                       const DominantWeight& mu,
                                                       const Rational& alpha) {
    if (alpha == 0)
        throw ZeroAlphaError();
    if (lambda.size() != mu.size())
        throw LengthMismatchError(lambda.size(), mu.size());

    const GroupedWeight grouped = group(lambda);
    const ForcedSplit split = split_forced(grouped, mu);
    if (!split.ok)
        return std::nullopt;
    assert(split.residual.size() == grouped.group_count());

    // c_t = -(2/alpha) prod_{r in R}(lv_t - r) / prod_{s != t}(lv_t - lv_s);
    // two monic degree-m polynomials agreeing at the m distinct lv_t are
    // identical, so this candidate is the only possible one.
    std::vector<Rational> c(grouped.group_count());
    for (std::size_t t = 0; t < grouped.group_count(); ++t) {
        Integer num = 1;
        for (long long r : split.residual) num *= Integer(grouped.values[t] - r);
        Integer den = 1;
        for (std::size_t s = 0; s < grouped.group_count(); ++s)
            if (s != t)
                den *= Integer(grouped.values[t] - grouped.values[s]);
        c[t] = Rational(Integer(-2) * num) / (alpha * Rational(den));
    }
    return c;
}

CGResult cg_multiplicity(const DominantWeight& lambda, const Rational& alpha,
                         const DominantWeight& mu) {
    if (alpha == 0)
        throw ZeroAlphaError();
    if (lambda.size() != mu.size())
        throw LengthMismatchError(lambda.size(), mu.size());

    CGResult result;
    const GroupedWeight grouped = group(lambda);
    if (is_strongly_dominant(lambda) && paper_system_determinant(paper_system(lambda, mu)) != 0)
        result.path = SolverPath::Theorem3System;
    else if (grouped.group_count() == 1)
        result.path = SolverPath::Theorem4Scalar;
    else
        result.path = SolverPath::GeneralGrouped;

    std::ostringstream diag;
    const ForcedSplit split = split_forced(grouped, mu);
    if (!split.ok) {
        diag << "forced spectrum check failed: mu must contain " << split.missing_value
             << " with multiplicity >= " << split.missing_needed << ", found "
             << split.missing_found;
        result.multiplicity = Multiplicity::finite(0);
        result.diagnostics = diag.str();
        return result;
    }

    const auto c = solve_group_norms(lambda, mu, alpha);
    assert(c.has_value());
    for (std::size_t t = 0; t < c->size(); ++t) {
        if ((*c)[t] < 0) {
            diag << "candidate group norm c_" << (t + 1) << " = " << format_rational((*c)[t])
                 << " is negative; the fiber is empty";
            result.multiplicity = Multiplicity::finite(0);
            result.diagnostics = diag.str();
            return result;
        }
    }

    result.multiplicity = Multiplicity::finite(1);
    result.group_norms = *c;
    std::vector<WitnessEntry> entries;
    entries.reserve(c->size());
    for (std::size_t t = 0; t < c->size(); ++t)
        entries.push_back(WitnessEntry{(*c)[t], grouped.group_start(t)});
    result.witness = std::move(entries);

    diag << "feasible: c = (";
    for (std::size_t t = 0; t < c->size(); ++t)
        diag << (t ? "," : "") << format_rational((*c)[t]);
    diag << "); fiber is a single orbit of the diag(lambda) stabilizer";
    result.diagnostics = diag.str();
    return result;
}

std::optional<ComplexVector> witness(const DominantWeight& lambda, const Rational& alpha,
                                     const DominantWeight& mu) {
    const CGResult result = cg_multiplicity(lambda, alpha, mu);
    if (!result.multiplicity.nonzero())
        return std::nullopt;
    return witness_vector(*result.witness, lambda.size());
}

ComplexVector witness_vector(std::span<const WitnessEntry> entries, std::size_t n) {
    ComplexVector z(n, Complex(0.0));
    for (const WitnessEntry& e : entries) {
        assert(e.index < n && e.radicand >= 0);
        z[e.index] = std::sqrt(to_double(e.radicand));
    }
    return z;
}

bool paper_necessary_condition(const DominantWeight& lambda, const Rational& alpha,
                               const DominantWeight& mu, std::span<const Rational> c) {
    const GroupedWeight grouped = group(lambda);
    if (c.size() != grouped.group_count())
        throw LengthMismatchError(c.size(), grouped.group_count());
    const Rational half_alpha = alpha / 2;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const Rational x(mu[k]);
        Rational full = 1;
        for (std::size_t i = 0; i < lambda.size(); ++i) full *= x - Rational(lambda[i]);
        Rational perturbation = 0;
        for (std::size_t t = 0; t < grouped.group_count(); ++t) {
            // (x - lv_t)^{n_t - 1} prod_{s != t} (x - lv_s)^{n_s}
            Rational term = c[t];
            for (std::size_t s = 0; s < grouped.group_count(); ++s) {
                const std::size_t power =
                    s == t ? grouped.multiplicities[s] - 1 : grouped.multiplicities[s];
                for (std::size_t rep = 0; rep < power; ++rep)
                    term *= x - Rational(grouped.values[s]);
            }
            perturbation += term;
        }
        if (full - half_alpha * perturbation != 0)
            return false;
    }
    return true;
}

bool theorem4_paper_form(const DominantWeight& lambda, const Rational& alpha,
                         const DominantWeight& mu) {
    if (alpha == 0)
        throw ZeroAlphaError();
    const GroupedWeight gl = group(lambda);
    if (gl.group_count() != 1)
        throw NotScalarLambdaError();
    if (lambda.size() != mu.size())
        throw LengthMismatchError(lambda.size(), mu.size());

    const long long a = gl.values[0];
    const GroupedWeight gm = group(mu);
    if (gm.group_count() != 2)
        return false; // needs both blocks nonempty, so mu = lambda never matches
    if (alpha > 0) {
        // (b,...,b,a,...,a) with b > a
        return gm.values[1] == a && gm.values[0] > a;
    }
    // (a,...,a,b,...,b) with b < a
    return gm.values[0] == a && gm.values[1] < a;
}

} // namespace orbitmult
