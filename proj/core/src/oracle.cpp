#include "orbitmult/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numbers>

#include "orbitmult/rational.hpp"

namespace orbitmult {

double Rng::uniform() {
    // top 53 bits -> [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 in (0, 1] so the log stays finite
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined state
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

namespace {

struct JacobiOutcome {
    std::vector<double> values; // unsorted diagonal
    CMatrix vectors;            // empty when not accumulated
};

JacobiOutcome jacobi(const HermitianMatrix& m, const OracleConfig& cfg, bool accumulate) {
    const std::size_t n = m.n();
    if (n == 0)
        throw DimensionMismatchError("empty matrix");
    const double scale = std::max(1.0, m.max_abs());
    if (!m.is_hermitian(1e-9))
        throw std::invalid_argument("matrix is not Hermitian within 1e-9");

    // work on the exact Hermitian average so roundoff in the input cannot
    // leak into complex diagonal entries
    CMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    CMatrix q;
    if (accumulate)
        q = CMatrix::identity(n);

    const double conv = 1e-14 * scale;
    int sweep = 0;
    while (true) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t r = p + 1; r < n; ++r)
                off = std::max(off, std::abs(a(p, r)));
        if (off <= conv)
            break;
        if (sweep >= cfg.max_sweeps)
            throw NotConvergedError(cfg.max_sweeps);
        ++sweep;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                const Complex b = a(p, r);
                const double absb = std::abs(b);
                if (absb <= conv * 1e-2)
                    continue;
                const double app = a(p, p).real();
                const double arr = a(r, r).real();
                const double tau = (arr - app) / (2.0 * absb);
                double t;
                if (tau >= 0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex u = b / absb;

                // A <- R* A R with R(p,p)=c, R(p,r)=s u, R(r,p)=-s conj(u), R(r,r)=c
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex ajp = a(j, p);
                    const Complex ajr = a(j, r);
                    a(j, p) = c * ajp - s * std::conj(u) * ajr;
                    a(j, r) = s * u * ajp + c * ajr;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j);
                    const Complex arj = a(r, j);
                    a(p, j) = c * apj - s * u * arj;
                    a(r, j) = s * std::conj(u) * apj + c * arj;
                }
                a(p, r) = 0.0;
                a(r, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(r, r) = Complex(a(r, r).real(), 0.0);

                if (accumulate) {
                    for (std::size_t j = 0; j < n; ++j) {
                        const Complex qjp = q(j, p);
                        const Complex qjr = q(j, r);
                        q(j, p) = c * qjp - s * std::conj(u) * qjr;
                        q(j, r) = s * u * qjp + c * qjr;
                    }
                }
            }
        }
    }

    JacobiOutcome out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i).real();
    out.vectors = std::move(q);
    return out;
}

std::vector<std::size_t> descending_order(const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    return idx;
}

} // namespace

EigenSystem hermitian_eigensystem(const HermitianMatrix& m, const OracleConfig& cfg) {
    JacobiOutcome raw = jacobi(m, cfg, true);
    const auto idx = descending_order(raw.values);
    EigenSystem out;
    out.values.resize(m.n());
    out.vectors = CMatrix(m.n());
    for (std::size_t col = 0; col < m.n(); ++col) {
        out.values[col] = raw.values[idx[col]];
        for (std::size_t rowi = 0; rowi < m.n(); ++rowi)
            out.vectors(rowi, col) = raw.vectors(rowi, idx[col]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m, const OracleConfig& cfg) {
    JacobiOutcome raw = jacobi(m, cfg, false);
    std::sort(raw.values.begin(), raw.values.end(), std::greater<>());
    return raw.values;
}

CMatrix random_unitary(Rng& rng, std::size_t n) {
    assert(n >= 1);
    CMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = rng.complex_gaussian();

    // modified Gram-Schmidt on columns, run twice
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t prev = 0; prev < col; ++prev) {
                Complex proj = 0.0;
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(g(i, prev)) * g(i, col);
                for (std::size_t i = 0; i < n; ++i) g(i, col) -= proj * g(i, prev);
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, col));
            nrm = std::sqrt(nrm);
            for (std::size_t i = 0; i < n; ++i) g(i, col) /= nrm;
        }
    }
    return g;
}

CMatrix weight_diagonal(const DominantWeight& lambda) {
    CMatrix m(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) m(i, i) = static_cast<double>(lambda[i]);
    return m;
}

bool verify_membership(const DominantWeight& lambda, double alpha, const ComplexVector& z,
                       const DominantWeight& mu, const OracleConfig& cfg) {
    if (lambda.size() != mu.size())
        throw LengthMismatchError(lambda.size(), mu.size());
    if (z.size() != lambda.size())
        throw LengthMismatchError(z.size(), lambda.size());
    CMatrix m = weight_diagonal(lambda);
    m += 0.5 * alpha * rank_one(z);
    const std::vector<double> spec = hermitian_eigenvalues(m, cfg);
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (std::abs(spec[i] - static_cast<double>(mu[i])) > cfg.tol)
            return false;
    return true;
}

namespace {

// Any z with the target spectrum has group norms c_t that are nonnegative
// integer multiples of 2/(alpha * prod_{s != t}(lv_t - lv_s)): evaluating the
// characteristic polynomial at the distinct diagonal values pins each c_t to
// an integer numerator over that product. Scanning this grid is therefore
// exhaustive for the trace budget, not a heuristic.
std::vector<double> group_norm_steps(const GroupedWeight& grouped, double alpha) {
    const std::size_t m = grouped.group_count();
    std::vector<double> steps(m);
    for (std::size_t t = 0; t < m; ++t) {
        Integer prod = 1;
        for (std::size_t s = 0; s < m; ++s)
            if (s != t)
                prod *= Integer(grouped.values[t] - grouped.values[s]);
        steps[t] = std::abs(2.0 / (alpha * prod.convert_to<double>()));
    }
    return steps;
}

} // namespace

std::optional<ComplexVector> randomized_search(const DominantWeight& lambda, double alpha,
                                               const DominantWeight& mu, std::uint64_t budget,
                                               const OracleConfig& cfg) {
    if (alpha == 0.0)
        throw ZeroAlphaError();
    if (lambda.size() != mu.size())
        throw LengthMismatchError(lambda.size(), mu.size());

    const std::size_t n = lambda.size();
    const GroupedWeight grouped = group(lambda);
    const std::size_t groups = grouped.group_count();

    // trace constraint: sum_t c_t = 2 (sum mu - sum lambda) / alpha
    const double total = 2.0 * static_cast<double>(mu.sum() - lambda.sum()) / alpha;
    if (total < -1e-9)
        return std::nullopt;

    const std::vector<double> steps = group_norm_steps(grouped, alpha);
    Rng rng(cfg.seed);

    std::vector<double> norms(groups, 0.0);
    std::uint64_t used = 0;
    ComplexVector z(n);

    // try one candidate norm vector with a random direction inside each group
    const auto try_candidate = [&]() -> bool {
        for (std::size_t t = 0; t < groups; ++t) {
            const std::size_t start = grouped.group_start(t);
            const std::size_t size = grouped.multiplicities[t];
            ComplexVector dir(size);
            double dn = 0.0;
            for (std::size_t i = 0; i < size; ++i) {
                dir[i] = rng.complex_gaussian();
                dn += std::norm(dir[i]);
            }
            if (norms[t] <= 0.0) {
                for (std::size_t i = 0; i < size; ++i) z[start + i] = 0.0;
                continue;
            }
            while (dn < 1e-30) { // essentially impossible, but keep it total
                dn = 0.0;
                for (std::size_t i = 0; i < size; ++i) {
                    dir[i] = rng.complex_gaussian();
                    dn += std::norm(dir[i]);
                }
            }
            const double f = std::sqrt(norms[t] / dn);
            for (std::size_t i = 0; i < size; ++i) z[start + i] = f * dir[i];
        }
        return verify_membership(lambda, alpha, z, mu, cfg);
    };

    // depth-first over grid multiples for groups 0..groups-2; the last norm
    // is pinned by the trace
    std::optional<ComplexVector> found;
    const std::function<bool(std::size_t, double)> scan = [&](std::size_t t,
                                                              double remaining) -> bool {
        if (used >= budget)
            return true; // exhausted
        if (t + 1 == groups) {
            if (remaining < -1e-9)
                return false;
            norms[t] = std::max(remaining, 0.0);
            ++used;
            if (try_candidate())
                found = z;
            return found.has_value() || used >= budget;
        }
        for (std::uint64_t j = 0;; ++j) {
            const double c = static_cast<double>(j) * steps[t];
            if (c > remaining + 1e-9)
                break;
            norms[t] = c;
            if (scan(t + 1, remaining - c))
                return true;
        }
        return false;
    };

    scan(0, std::max(total, 0.0));
    return found;
}

} // namespace orbitmult
