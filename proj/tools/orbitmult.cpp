// Command line front end: single queries, range scans, comparison tables,
// and verification runs. See README.md for the output formats.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbitmult/branching.hpp"
#include "orbitmult/cg_solver.hpp"
#include "orbitmult/oracle.hpp"
#include "orbitmult/serialize.hpp"

namespace {

using namespace orbitmult;

DominantWeight read_weight(const std::string& text) {
    DominantWeight w = parse_weight(text);
    if (w.size() == 1)
        std::cerr << "warning: n = 1; the multiplicity theory here assumes n >= 2\n";
    return w;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("ORBITMULT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("ORBITMULT_SEED is not an integer: ") + env);
        }
    }
    return flag_seed;
}

// All dominant tuples of length n with entries in [lo, hi], lexicographically
// descending.
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

std::pair<long long, long long> parse_range(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("range must be lo:hi, got '" + text + "'");
    try {
        const long long lo = std::stoll(text.substr(0, colon));
        const long long hi = std::stoll(text.substr(colon + 1));
        if (lo > hi)
            throw ParseError("empty range '" + text + "'");
        return {lo, hi};
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("range must be lo:hi, got '" + text + "'");
    }
}

AlphaSign parse_sign(const std::string& text) {
    if (text == "+" || text == "pos" || text == "positive")
        return AlphaSign::Positive;
    if (text == "-" || text == "neg" || text == "negative")
        return AlphaSign::Negative;
    throw ParseError("alpha sign must be '+' or '-', got '" + text + "'");
}

Convention parse_convention(const std::string& text) {
    static const std::map<std::string, Convention> table = {
        {"PaperFock", Convention::PaperFock},       {"paperfock", Convention::PaperFock},
        {"paper", Convention::PaperFock},           {"ConjugateFock", Convention::ConjugateFock},
        {"conjugatefock", Convention::ConjugateFock}, {"conjugate", Convention::ConjugateFock},
    };
    const auto it = table.find(text);
    if (it == table.end())
        throw ParseError("unknown convention '" + text + "'");
    return it->second;
}

int run_cg(const std::string& lambda_s, const std::string& alpha_s, const std::string& mu_s) {
    const DominantWeight lambda = read_weight(lambda_s);
    const DominantWeight mu = read_weight(mu_s);
    const Rational alpha = parse_rational(alpha_s);
    std::cout << to_json(cg_multiplicity(lambda, alpha, mu)) << "\n";
    return 0;
}

int run_branch(const std::string& lambda_s, const std::string& sign_s, const std::string& mu_s,
               const std::string& convention_s) {
    const DominantWeight lambda = read_weight(lambda_s);
    const DominantWeight mu = read_weight(mu_s);
    const int m = branching_multiplicity(lambda, mu, parse_sign(sign_s),
                                         parse_convention(convention_s));
    std::cout << "{\"m\":" << m << ",\"k\":" << (lambda.sum() - mu.sum()) << "}\n";
    return 0;
}

int run_decompose(const std::string& lambda_s, unsigned k) {
    const DominantWeight lambda = read_weight(lambda_s);
    const auto constituents = tensor_with_dual_sym(lambda, k);
    for (std::size_t i = 0; i < constituents.size(); ++i)
        std::cout << (i ? " " : "") << "(" << format_weight(constituents[i]) << ")";
    std::cout << "\n";
    return 0;
}

int run_compare(const std::string& lambda_s, const std::string& alpha_s,
                const std::string& mu_box, std::optional<unsigned> k_max) {
    const DominantWeight lambda = read_weight(lambda_s);
    const Rational alpha = parse_rational(alpha_s);

    std::vector<DominantWeight> mu_set;
    if (!mu_box.empty()) {
        const auto [lo, hi] = parse_range(mu_box);
        mu_set = dominant_box(lambda.size(), lo, hi);
    } else if (k_max) {
        const BranchingTable table =
            branch_table(lambda, sign_of_alpha(alpha), Convention::PaperFock, *k_max);
        for (const BranchingRow& row : table.rows)
            mu_set.insert(mu_set.end(), row.constituents.begin(), row.constituents.end());
    } else {
        throw ParseError("compare needs --mu-box or --k-max");
    }

    const std::vector<CompareRow> rows = compare_n_m(lambda, alpha, mu_set);
    const bool scalar_lambda = group(lambda).group_count() == 1;
    std::vector<bool> flags(rows.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (scalar_lambda && rows[i].mu != lambda)
            flags[i] = theorem4_paper_form(lambda, alpha, rows[i].mu) != rows[i].n.nonzero();
    }
    std::cout << to_csv(rows, flags);
    return 0;
}

int run_verify(const std::string& lambda_s, const std::string& alpha_s, const std::string& mu_s,
               std::uint64_t budget, std::uint64_t seed, double tol) {
    const DominantWeight lambda = read_weight(lambda_s);
    const DominantWeight mu = read_weight(mu_s);
    const Rational alpha = parse_rational(alpha_s);

    OracleConfig cfg;
    cfg.tol = tol;
    cfg.seed = effective_seed(seed);

    const CGResult result = cg_multiplicity(lambda, alpha, mu);
    bool confirmed;
    std::string detail;
    if (result.multiplicity.nonzero()) {
        const ComplexVector z = witness_vector(*result.witness, lambda.size());
        confirmed = verify_membership(lambda, to_double(alpha), z, mu, cfg);
        detail = confirmed ? "witness spectrum matches mu" : "witness spectrum does not match mu";
    } else {
        const auto found = randomized_search(lambda, to_double(alpha), mu, budget, cfg);
        confirmed = !found.has_value();
        detail = confirmed ? "randomized search found no point of the fiber"
                           : "randomized search found a fiber point the solver missed";
    }
    std::cout << "{\"n\":" << (result.multiplicity.nonzero() ? 1 : 0)
              << ",\"verified\":" << (confirmed ? "true" : "false") << ",\"seed\":" << cfg.seed
              << ",\"detail\":\"" << detail << "\"}\n";
    return confirmed ? 0 : 2;
}

int run_table(const std::string& lambda_s, const std::string& alpha_s, unsigned k_max,
              const std::string& format) {
    const DominantWeight lambda = read_weight(lambda_s);
    const Rational alpha = parse_rational(alpha_s);
    const BranchingTable table =
        branch_table(lambda, sign_of_alpha(alpha), Convention::PaperFock, k_max);
    if (format == "json")
        std::cout << to_json(table) << "\n";
    else if (format == "csv")
        std::cout << to_csv(table);
    else
        throw ParseError("format must be json or csv");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Corwin-Greenleaf multiplicities and branching for U(n) x H_n motion groups"};
    app.require_subcommand(1);

    std::string lambda_s, mu_s, alpha_s = "1", sign_s = "+", convention_s = "PaperFock";
    std::string mu_box, format = "json";
    unsigned k = 0, k_max = 0;
    std::uint64_t budget = 200000, seed = 0;
    double tol = 1e-8;
    bool have_k_max = false;

    auto* cg = app.add_subcommand("cg", "Orbit multiplicity with exact certificate");
    cg->add_option("--lambda", lambda_s, "dominant weight, comma separated")->required();
    cg->add_option("--alpha", alpha_s, "nonzero rational, p/q or integer")->required();
    cg->add_option("--mu", mu_s, "dominant weight, comma separated")->required();

    auto* branch = app.add_subcommand("branch", "Branching multiplicity of tau_mu");
    branch->add_option("--lambda", lambda_s)->required();
    branch->add_option("--alpha-sign", sign_s, "+ or -");
    branch->add_option("--mu", mu_s)->required();
    branch->add_option("--convention", convention_s, "PaperFock or ConjugateFock");

    auto* decompose = app.add_subcommand("decompose", "Constituents of one Fock layer");
    decompose->add_option("--lambda", lambda_s)->required();
    decompose->add_option("--k", k, "strip size")->required();

    auto* compare = app.add_subcommand("compare", "CSV table of n versus m over a mu range");
    compare->add_option("--lambda", lambda_s)->required();
    compare->add_option("--alpha", alpha_s)->required();
    compare->add_option("--mu-box", mu_box, "entry range lo:hi");
    compare->add_option("--k-max", k_max, "use branching rows 0..k_max as the mu set")
        ->each([&](const std::string&) { have_k_max = true; });

    auto* verify = app.add_subcommand("verify", "Check the solver against the eigenvalue oracle");
    verify->add_option("--lambda", lambda_s)->required();
    verify->add_option("--alpha", alpha_s)->required();
    verify->add_option("--mu", mu_s)->required();
    verify->add_option("--budget", budget, "search samples when the solver reports 0");
    verify->add_option("--seed", seed, "rng seed (ORBITMULT_SEED overrides)");
    verify->add_option("--tol", tol, "eigenvalue tolerance");

    auto* table = app.add_subcommand("table", "Branching table up to k_max");
    table->add_option("--lambda", lambda_s)->required();
    table->add_option("--alpha", alpha_s)->required();
    table->add_option("--k-max", k_max)->required();
    table->add_option("--format", format, "json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(cg))
            return run_cg(lambda_s, alpha_s, mu_s);
        if (app.got_subcommand(branch))
            return run_branch(lambda_s, sign_s, mu_s, convention_s);
        if (app.got_subcommand(decompose))
            return run_decompose(lambda_s, k);
        if (app.got_subcommand(compare))
            return run_compare(lambda_s, alpha_s, mu_box, have_k_max
                                                              ? std::optional<unsigned>(k_max)
                                                              : std::nullopt);
        if (app.got_subcommand(verify))
            return run_verify(lambda_s, alpha_s, mu_s, budget, seed, tol);
        if (app.got_subcommand(table))
            return run_table(lambda_s, alpha_s, k_max, format);
    } catch (const orbitmult::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
