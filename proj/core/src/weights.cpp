#include "orbitmult/weights.hpp"

#include <cassert>

namespace orbitmult {

DominantWeight::DominantWeight(std::vector<long long> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw NotDominantError(0);
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
        if (entries_[i] < entries_[i + 1])
            throw NotDominantError(i);
    }
}

long long DominantWeight::sum() const {
    long long s = 0;
    for (long long e : entries_) s += e;
    return s;
}

DominantWeight DominantWeight::shifted(long long c) const {
    std::vector<long long> out = entries_;
    for (long long& e : out) e += c;
    return DominantWeight(std::move(out));
}

DominantWeight validate(std::span<const long long> entries) {
    return DominantWeight(std::vector<long long>(entries.begin(), entries.end()));
}

std::size_t GroupedWeight::group_start(std::size_t t) const {
    assert(t < values.size());
    std::size_t start = 0;
    for (std::size_t s = 0; s < t; ++s) start += multiplicities[s];
    return start;
}

DominantWeight GroupedWeight::expand() const {
    std::vector<long long> out;
    for (std::size_t t = 0; t < values.size(); ++t)
        out.insert(out.end(), multiplicities[t], values[t]);
    return DominantWeight(std::move(out));
}

GroupedWeight group(const DominantWeight& lambda) {
    GroupedWeight g;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (g.values.empty() || g.values.back() != lambda[i]) {
            g.values.push_back(lambda[i]);
            g.multiplicities.push_back(1);
        } else {
            ++g.multiplicities.back();
        }
    }
    return g;
}

bool is_strongly_dominant(const DominantWeight& lambda) {
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
        if (lambda[i] == lambda[i + 1])
            return false;
    }
    return true;
}

bool interlaces_below(const DominantWeight& lambda, const DominantWeight& mu) {
    if (lambda.size() != mu.size())
        throw LengthMismatchError(lambda.size(), mu.size());
    const std::size_t n = lambda.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda[i] < mu[i])
            return false;
        if (i + 1 < n && mu[i] < lambda[i + 1])
            return false;
    }
    return true;
}

Integer weyl_dimension(const DominantWeight& lambda) {
    const std::size_t n = lambda.size();
    Integer num = 1;
    Integer den = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= Integer(lambda[i] - lambda[j]) + Integer(j - i);
            den *= Integer(j - i);
        }
    }
    assert(num % den == 0);
    return num / den;
}

Integer binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer result = 1;
    for (std::size_t i = 0; i < k; ++i) {
        result *= Integer(n - i);
        result /= Integer(i + 1); // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

} // namespace orbitmult
