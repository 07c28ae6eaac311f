// Acceptance suite: nine end-to-end criteria, one pass/fail line each.
// Exit code is the number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbitmult/branching.hpp"
#include "orbitmult/cg_solver.hpp"
#include "orbitmult/oracle.hpp"
#include "orbitmult/orbit_space.hpp"
#include "orbitmult/serialize.hpp"

using namespace orbitmult;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::vector<DominantWeight> dominant_box(std::size_t n, long long lo, long long hi) {
    std::vector<DominantWeight> out;
    std::vector<long long> v(n);
    const std::function<void(std::size_t, long long)> walk = [&](std::size_t i, long long cap) {
        if (i == n) {
            out.push_back(DominantWeight(v));
            return;
        }
        for (long long x = cap; x >= lo; --x) {
            v[i] = x;
            walk(i + 1, x);
        }
    };
    walk(0, hi);
    return out;
}

DominantWeight random_strongly_dominant(std::mt19937_64& eng, std::size_t n, long long bound) {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    std::set<long long> picked;
    while (picked.size() < n) picked.insert(dist(eng));
    std::vector<long long> v(picked.rbegin(), picked.rend());
    return DominantWeight(std::move(v));
}

// 1. Lowered-last-coordinate targets: multiplicity 1 on both sides, exactly.
//    The spectrum shifts downward, so the negative-alpha member of the
//    family realizes it; alpha = -1 here.
Outcome criterion1() {
    std::mt19937_64 eng(1001);
    const Rational alpha(-1);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const DominantWeight lambda = random_strongly_dominant(eng, n, 20);
        for (unsigned k = 0; k <= 10; ++k) {
            std::vector<long long> m(lambda.entries());
            m.back() -= k;
            const DominantWeight mu(std::move(m));
            if (cg_multiplicity(lambda, alpha, mu).multiplicity != Multiplicity::finite(1))
                return {false, "cg != 1 at lambda=" + format_weight(lambda) +
                                   " k=" + std::to_string(k)};
            if (branching_multiplicity(lambda, mu, AlphaSign::Negative) != 1)
                return {false, "m != 1 at lambda=" + format_weight(lambda) +
                                   " k=" + std::to_string(k)};
        }
    }
    return {true, "100 strongly dominant lambda x k=0..10, alpha=-1, all n=m=1"};
}

// 2. Nonvanishing transfer m != 0 => n != 0, exhaustive over n in {2,3},
//    entries in [-3,3], alpha in {+-1, +-2}, PaperFock.
Outcome criterion2() {
    const std::vector<Rational> alphas = {Rational(1), Rational(2), Rational(-1), Rational(-2)};
    long long violations_pos = 0, violations_neg = 0, checked = 0;
    std::string first;
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto box = dominant_box(n, -3, 3);
        for (const DominantWeight& lambda : box) {
            for (const DominantWeight& mu : box) {
                const int m = branching_multiplicity(lambda, mu, AlphaSign::Positive,
                                                     Convention::PaperFock);
                if (m == 0)
                    continue;
                for (const Rational& alpha : alphas) {
                    ++checked;
                    if (!cg_multiplicity(lambda, alpha, mu).multiplicity.nonzero()) {
                        (alpha > 0 ? violations_pos : violations_neg) += 1;
                        if (first.empty())
                            first = "lambda=" + format_weight(lambda) +
                                    " mu=" + format_weight(mu) +
                                    " alpha=" + format_rational(alpha);
                    }
                }
            }
        }
    }
    std::ostringstream detail;
    detail << checked << " pairs with m=1; violations: " << violations_neg
           << " at alpha<0, " << violations_pos << " at alpha>0";
    if (violations_pos + violations_neg > 0)
        detail << " (first: " << first
               << "); the fixed K-types (0,..,0,-k) lower the weight while a positive"
               << " alpha raises the spectrum, so every strict strip at alpha>0 disagrees";
    return {violations_pos + violations_neg == 0, detail.str()};
}

// 3. The converse fails at lambda=(-1,-1), alpha=1, mu=(0,-1): n=1, m=0.
Outcome criterion3() {
    const DominantWeight lambda({-1, -1});
    const DominantWeight mu({0, -1});
    const CGResult r = cg_multiplicity(lambda, Rational(1), mu);
    const int m = branching_multiplicity(lambda, mu, AlphaSign::Positive);
    const bool pass = r.multiplicity == Multiplicity::finite(1) && m == 0;
    return {pass, "n=" + std::to_string(r.multiplicity.value()) + " m=" + std::to_string(m)};
}

// 4. Invertible-system case: n <= 1 and the two exact routes coincide.
Outcome criterion4() {
    const std::vector<Rational> alphas = {Rational(1), Rational(2), Rational(-1), Rational(-2)};
    long long agreements = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto box = dominant_box(n, -4, 4);
        for (const DominantWeight& lambda : box) {
            if (!is_strongly_dominant(lambda))
                continue;
            for (const DominantWeight& mu : box) {
                for (const Rational& alpha : alphas) {
                    const auto via_system = solve_paper_system(lambda, mu, alpha);
                    if (!via_system.has_value())
                        continue; // det B = 0 excluded by the hypothesis
                    const CGResult r = cg_multiplicity(lambda, alpha, mu);
                    if (r.multiplicity.is_infinite() || r.multiplicity.value() > 1)
                        return {false, "multiplicity above 1 at lambda=" +
                                           format_weight(lambda) + " mu=" + format_weight(mu)};
                    const auto via_groups = solve_group_norms(lambda, mu, alpha);
                    if (!via_groups.has_value() || *via_groups != *via_system)
                        return {false, "route mismatch at lambda=" + format_weight(lambda) +
                                           " mu=" + format_weight(mu) +
                                           " alpha=" + format_rational(alpha)};
                    ++agreements;
                }
            }
        }
    }
    return {true, std::to_string(agreements) + " invertible cells, routes identical, n <= 1"};
}

// 5. Scalar lambda sweep: nonzero exactly on first-coordinate bumps, the
//    literal classification over-accepts (5,5,0), and the oracle confirms
//    every witness.
Outcome criterion5() {
    const DominantWeight lambda({0, 0, 0});
    const Rational alpha(2);
    OracleConfig cfg; // tol 1e-8
    for (const DominantWeight& mu : dominant_box(3, -6, 6)) {
        if (mu == lambda)
            continue; // the scalar classification assumes mu != lambda
        const CGResult r = cg_multiplicity(lambda, alpha, mu);
        const bool bump = mu[0] >= 1 && mu[0] <= 6 && mu[1] == 0 && mu[2] == 0;
        if (r.multiplicity.nonzero() != bump)
            return {false, "solver disagrees with the (b,0,0) classification at mu=" +
                               format_weight(mu)};
        if (r.multiplicity.nonzero()) {
            const ComplexVector z = witness_vector(*r.witness, 3);
            if (!verify_membership(lambda, 2.0, z, mu, cfg))
                return {false, "oracle rejected the witness at mu=" + format_weight(mu)};
        }
    }
    const DominantWeight flat({5, 5, 0});
    if (!theorem4_paper_form(lambda, alpha, flat))
        return {false, "literal form should accept (5,5,0)"};
    if (cg_multiplicity(lambda, alpha, flat).multiplicity.nonzero())
        return {false, "solver should reject (5,5,0)"};
    const std::vector<DominantWeight> mus = {flat};
    const auto rows = compare_n_m(lambda, alpha, mus);
    const bool flagged = theorem4_paper_form(lambda, alpha, flat) != rows[0].n.nonzero();
    if (!flagged)
        return {false, "compare failed to flag (5,5,0)"};
    return {true, "nonzero exactly at (b,0,0), b=1..6; (5,5,0) flagged; witnesses certified"};
}

// 6. Strip dimension count against dim(lambda) * C(n+k-1, k).
Outcome criterion6() {
    std::mt19937_64 eng(6006);
    std::uniform_int_distribution<long long> entry(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 4;
        std::vector<long long> v(n);
        for (auto& e : v) e = entry(eng);
        std::sort(v.begin(), v.end(), std::greater<>());
        const DominantWeight lambda(std::move(v));
        for (unsigned k = 0; k <= 6; ++k) {
            Integer total = 0;
            for (const DominantWeight& nu : tensor_with_dual_sym(lambda, k))
                total += weyl_dimension(nu);
            if (total != weyl_dimension(lambda) * binomial(n + k - 1, k))
                return {false, "dimension mismatch at lambda=" + format_weight(lambda) +
                                   " k=" + std::to_string(k)};
        }
    }
    return {true, "50 random lambda (n <= 4) x k=0..6, exact"};
}

// 7. Fock layer trace equals the alternant character.
Outcome criterion7() {
    std::mt19937_64 eng(7007);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const unsigned k = static_cast<unsigned>(eng() % 6);
        std::vector<double> theta(n);
        for (double& t : theta) t = phase(eng);
        const auto [h, chi] = fock_character_check(n, k, theta);
        worst = std::max(worst, std::abs(h - chi));
        if (std::abs(h - chi) > 1e-8)
            return {false, "identity broke at n=" + std::to_string(n) +
                               " k=" + std::to_string(k)};
    }
    std::ostringstream detail;
    detail << "100 phase vectors, max |h_k - chi| = " << worst;
    return {true, detail.str()};
}

// 8. Orbit invariant is constant along 1000 random coadjoint images and the
//    central parameter is copied bit for bit.
Outcome criterion8() {
    LinearForm phi;
    phi.S = CMatrix::diagonal(std::vector<double>{3.0, 1.0});
    phi.u = ComplexVector(2, 0.0);
    phi.x = 2.0;
    Rng rng(8008);
    for (int trial = 0; trial < 1000; ++trial) {
        GroupElement g;
        g.k = random_unitary(rng, 2);
        g.z = {rng.complex_gaussian(), rng.complex_gaussian()};
        g.t = rng.gaussian();
        const LinearForm moved = coadjoint_action(g, phi);
        if (moved.x != 2.0)
            return {false, "central parameter drifted"};
        const OrbitInvariant inv = generic_orbit_invariant(moved);
        if (std::abs(inv.spectrum[0] - 3.0) > 1e-8 || std::abs(inv.spectrum[1] - 1.0) > 1e-8)
            return {false, "invariant drifted at trial " + std::to_string(trial)};
    }
    return {true, "1000 random group elements, invariant (3,1;2) within 1e-8, x exact"};
}

// 9. Solver versus randomized search over the full criterion-2 range.
Outcome criterion9() {
    const std::vector<Rational> alphas = {Rational(1), Rational(2), Rational(-1), Rational(-2)};
    OracleConfig cfg;
    cfg.tol = 1e-6;
    cfg.seed = 9009;
    long long cells = 0;
    std::uint64_t cell_index = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto box = dominant_box(n, -3, 3);
        for (const DominantWeight& lambda : box) {
            for (const DominantWeight& mu : box) {
                for (const Rational& alpha : alphas) {
                    OracleConfig cell_cfg = cfg;
                    cell_cfg.seed = derive_seed(cfg.seed, cell_index++);
                    const bool solver_says =
                        cg_multiplicity(lambda, alpha, mu).multiplicity.nonzero();
                    const bool search_says =
                        randomized_search(lambda, to_double(alpha), mu, 200000, cell_cfg)
                            .has_value();
                    if (solver_says != search_says)
                        return {false, "disagreement at lambda=" + format_weight(lambda) +
                                           " mu=" + format_weight(mu) +
                                           " alpha=" + format_rational(alpha)};
                    ++cells;
                }
            }
        }
    }
    return {true, std::to_string(cells) + " cells, search success iff multiplicity 1"};
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        double budget_seconds; // 0 = unconstrained
        std::function<Outcome()> fn;
    };
    const std::vector<Entry> entries = {
        {1, "lowered-last-coordinate family has n = m = 1", 5.0, criterion1},
        {2, "branching nonvanishing transfers to the orbit count", 60.0, criterion2},
        {3, "converse failure at lambda=(-1,-1), alpha=1, mu=(0,-1)", 0.0, criterion3},
        {4, "invertible-system route matches the grouped route", 0.0, criterion4},
        {5, "scalar-lambda sweep with literal-classification flag", 0.0, criterion5},
        {6, "strip dimension identity", 0.0, criterion6},
        {7, "Fock layer character identity", 0.0, criterion7},
        {8, "orbit invariant constancy", 0.0, criterion8},
        {9, "solver/search completeness", 600.0, criterion9},
    };

    int failures = 0;
    for (const Entry& entry : entries) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = entry.fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (entry.budget_seconds > 0.0 && seconds > entry.budget_seconds) {
            outcome.pass = false;
            outcome.detail += " [over time budget]";
        }
        std::printf("[%s] criterion %d: %s - %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL",
                    entry.id, entry.name, outcome.detail.c_str(), seconds);
        if (!outcome.pass)
            ++failures;
    }
    return failures;
}
