#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "orbitmult/branching.hpp"

using namespace orbitmult;

namespace {

DominantWeight rand_weight(std::mt19937_64& eng, std::size_t n, long long lo, long long hi) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    std::vector<long long> v(n);
    for (auto& e : v) e = dist(eng);
    std::sort(v.begin(), v.end(), std::greater<>());
    return DominantWeight(std::move(v));
}

} // namespace

TEST_CASE("strip removal on frozen cases") {
    const auto row = tensor_with_dual_sym(DominantWeight({1, 0}), 1);
    REQUIRE(row.size() == 2);
    CHECK(row[0] == DominantWeight({1, -1}));
    CHECK(row[1] == DominantWeight({0, 0}));
    // dimension bookkeeping: 2 * 2 = 3 + 1
    CHECK(weyl_dimension(row[0]) + weyl_dimension(row[1]) == 4);

    for (unsigned k = 0; k <= 4; ++k) {
        const auto scalar_row = tensor_with_dual_sym(DominantWeight({-1, -1, -1}), k);
        REQUIRE(scalar_row.size() == 1);
        CHECK(scalar_row[0] ==
              DominantWeight({-1, -1, -1 - static_cast<long long>(k)}));
    }

    const DominantWeight lam({4, 2, 0});
    const auto trivial = tensor_with_dual_sym(lam, 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == lam);
}

TEST_CASE("strip addition mirrors removal") {
    const auto row = tensor_with_sym(DominantWeight({0, 0}), 2);
    REQUIRE(row.size() == 1);
    CHECK(row[0] == DominantWeight({2, 0}));

    const auto row2 = tensor_with_sym(DominantWeight({1, 0}), 1);
    REQUIRE(row2.size() == 2);
    CHECK(row2[0] == DominantWeight({2, 0}));
    CHECK(row2[1] == DominantWeight({1, 1}));
}

TEST_CASE("rows are multiplicity free and disjoint across k") {
    std::mt19937_64 eng(88);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + eng() % 4;
        const DominantWeight lambda = rand_weight(eng, n, -3, 3);
        std::set<std::vector<long long>> seen;
        for (unsigned k = 0; k <= 5; ++k) {
            for (const DominantWeight& nu : tensor_with_dual_sym(lambda, k)) {
                CHECK(seen.insert(nu.entries()).second); // never repeats, any row
                CHECK(lambda.sum() - nu.sum() == static_cast<long long>(k));
                CHECK(interlaces_below(lambda, nu));
            }
        }
    }
}

TEST_CASE("dimension identity against the symmetric power") {
    std::mt19937_64 eng(20260809);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + eng() % 4;
        const DominantWeight lambda = rand_weight(eng, n, -3, 3);
        for (unsigned k = 0; k <= 6; ++k) {
            Integer total = 0;
            for (const DominantWeight& nu : tensor_with_dual_sym(lambda, k))
                total += weyl_dimension(nu);
            CHECK(total == weyl_dimension(lambda) * binomial(n + k - 1, k));
        }
    }
}

TEST_CASE("closed-form multiplicity agrees with enumeration") {
    std::mt19937_64 eng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + eng() % 3;
        const DominantWeight lambda = rand_weight(eng, n, -3, 3);
        const DominantWeight mu = rand_weight(eng, n, -3, 3);
        const long long k = lambda.sum() - mu.sum();
        bool enumerated = false;
        if (k >= 0) {
            const auto row = tensor_with_dual_sym(lambda, static_cast<unsigned>(k));
            enumerated = std::find(row.begin(), row.end(), mu) != row.end();
        }
        const int closed = branching_multiplicity(lambda, mu, AlphaSign::Positive);
        CHECK(closed == (enumerated ? 1 : 0));
    }
}

TEST_CASE("branching multiplicity on frozen cases") {
    CHECK(branching_multiplicity(DominantWeight({3, 1}), DominantWeight({3, 0}),
                                 AlphaSign::Positive) == 1);
    CHECK(branching_multiplicity(DominantWeight({-1, -1, -1}), DominantWeight({0, 0, -1}),
                                 AlphaSign::Positive) == 0);
    const DominantWeight lam({2, 0});
    CHECK(branching_multiplicity(lam, lam, AlphaSign::Negative) == 1);

    // conjugate convention flips the strip direction for negative alpha
    CHECK(branching_multiplicity(DominantWeight({-1, -1}), DominantWeight({0, -1}),
                                 AlphaSign::Negative, Convention::ConjugateFock) == 1);
    CHECK(branching_multiplicity(DominantWeight({-1, -1}), DominantWeight({-1, -2}),
                                 AlphaSign::Negative, Convention::ConjugateFock) == 0);
    // but not for positive alpha
    CHECK(branching_multiplicity(DominantWeight({-1, -1}), DominantWeight({-1, -2}),
                                 AlphaSign::Positive, Convention::ConjugateFock) == 1);

    CHECK_THROWS_AS(branching_multiplicity(DominantWeight({1, 0}), DominantWeight({1, 0, 0}),
                                           AlphaSign::Positive),
                    LengthMismatchError);
}

TEST_CASE("branch tables") {
    const BranchingTable scalar =
        branch_table(DominantWeight({-1, -1}), AlphaSign::Positive, Convention::PaperFock, 2);
    REQUIRE(scalar.rows.size() == 3);
    for (unsigned k = 0; k <= 2; ++k) {
        REQUIRE(scalar.rows[k].constituents.size() == 1);
        CHECK(scalar.rows[k].constituents[0] ==
              DominantWeight({-1, -1 - static_cast<long long>(k)}));
    }

    const BranchingTable two =
        branch_table(DominantWeight({1, 0}), AlphaSign::Positive, Convention::PaperFock, 1);
    REQUIRE(two.rows.size() == 2);
    CHECK(two.rows[0].constituents == std::vector<DominantWeight>{DominantWeight({1, 0})});
    REQUIRE(two.rows[1].constituents.size() == 2);

    const BranchingTable single =
        branch_table(DominantWeight({4, 2}), AlphaSign::Negative, Convention::PaperFock, 0);
    REQUIRE(single.rows.size() == 1);
    CHECK(single.rows[0].constituents == std::vector<DominantWeight>{DominantWeight({4, 2})});
}

TEST_CASE("n versus m comparison rows") {
    // converse failure: the orbit count is 1 but the K-type is absent
    {
        const std::vector<DominantWeight> mus = {DominantWeight({0, -1})};
        const auto rows = compare_n_m(DominantWeight({-1, -1}), Rational(1), mus);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].n == Multiplicity::finite(1));
        CHECK(rows[0].m == 0);
        CHECK(rows[0].agree_nonvanishing);
    }
    // lowered last coordinate, negative alpha: both sides see it
    {
        const std::vector<DominantWeight> mus = {DominantWeight({3, 0})};
        const auto rows = compare_n_m(DominantWeight({3, 1}), Rational(-2), mus);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].n == Multiplicity::finite(1));
        CHECK(rows[0].m == 1);
        CHECK(rows[0].agree_nonvanishing);
        const auto c = solve_group_norms(DominantWeight({3, 1}), DominantWeight({3, 0}),
                                         Rational(-2));
        REQUIRE(c.has_value());
        CHECK((*c)[0] == Rational(0));
        CHECK((*c)[1] == Rational(1));
    }
    // same mu with positive alpha: the strip direction opposes the shift
    {
        const std::vector<DominantWeight> mus = {DominantWeight({3, 0})};
        const auto rows = compare_n_m(DominantWeight({3, 1}), Rational(2), mus);
        CHECK(rows[0].n == Multiplicity::finite(0));
        CHECK(rows[0].m == 1);
        CHECK_FALSE(rows[0].agree_nonvanishing);
    }
    // k = 0 layer
    {
        const DominantWeight lam({2, 2, 2});
        const std::vector<DominantWeight> mus = {lam};
        const auto rows = compare_n_m(lam, Rational(1), mus);
        CHECK(rows[0].n == Multiplicity::finite(1));
        CHECK(rows[0].m == 1);
        CHECK(rows[0].agree_nonvanishing);
    }
}

TEST_CASE("lowered-last-coordinate rows have n = m = 1 for negative alpha") {
    std::mt19937_64 eng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + eng() % 4;
        std::vector<long long> v(n);
        std::set<long long> used;
        std::uniform_int_distribution<long long> dist(-20, 20);
        while (used.size() < n) used.insert(dist(eng));
        std::copy(used.rbegin(), used.rend(), v.begin());
        const DominantWeight lambda(std::move(v));
        const unsigned k = static_cast<unsigned>(eng() % 11);
        std::vector<long long> m(lambda.entries());
        m.back() -= k;
        const DominantWeight mu(std::move(m));
        CHECK(cg_multiplicity(lambda, Rational(-1), mu).multiplicity ==
              Multiplicity::finite(1));
        CHECK(branching_multiplicity(lambda, mu, AlphaSign::Negative) == 1);
    }
}

TEST_CASE("fock character identity") {
    {
        const std::vector<double> theta = {0.3, 1.1};
        const auto [h, chi] = fock_character_check(2, 1, theta);
        const Complex want = std::exp(Complex(0, -0.3)) + std::exp(Complex(0, -1.1));
        CHECK(std::abs(h - want) <= 1e-12);
        CHECK(std::abs(chi - want) <= 1e-12);
    }
    {
        const std::vector<double> theta = {0.4, 1.9, 2.7};
        const auto [h, chi] = fock_character_check(3, 0, theta);
        CHECK(std::abs(h - Complex(1.0)) <= 1e-12);
        CHECK(std::abs(chi - Complex(1.0)) <= 1e-12);
    }
    std::mt19937_64 eng(606);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + eng() % 4;
        const unsigned k = eng() % 6;
        std::vector<double> theta(n);
        for (double& t : theta) t = phase(eng);
        const auto [h, chi] = fock_character_check(n, k, theta);
        CHECK(std::abs(h - chi) <= 1e-8);
    }
    // repeated phases go through the common perturbation and still agree
    const std::vector<double> equal = {0.7, 0.7, 0.7};
    const auto [h, chi] = fock_character_check(3, 2, equal);
    CHECK(std::abs(h - chi) <= 1e-8);
}
