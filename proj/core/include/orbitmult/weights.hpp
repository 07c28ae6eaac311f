#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orbitmult/errors.hpp"
#include "orbitmult/rational.hpp"

namespace orbitmult {

// A dominant weight of U(n): a non-increasing integer n-tuple. Immutable
// after construction; the constructor enforces the ordering.
class DominantWeight {
public:
    // Throws NotDominantError with the index of the first violation.
    explicit DominantWeight(std::vector<long long> entries);

    std::size_t size() const { return entries_.size(); }
    long long operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<long long>& entries() const { return entries_; }
    long long sum() const;

    // Shift every entry by c (a determinant twist). Stays dominant.
    DominantWeight shifted(long long c) const;

    bool operator==(const DominantWeight&) const = default;
    // Lexicographic; used only to order rows canonically.
    bool operator<(const DominantWeight& other) const { return entries_ < other.entries_; }

private:
    std::vector<long long> entries_;
};

// Validation entry point mirroring the constructor; convenient for callers
// holding raw spans.
DominantWeight validate(std::span<const long long> entries);

// Canonical grouped form: strictly decreasing distinct values with their
// multiplicities. expand() reproduces the source weight exactly.
struct GroupedWeight {
    std::vector<long long> values;
    std::vector<std::size_t> multiplicities;

    std::size_t group_count() const { return values.size(); }
    // Index of the first coordinate belonging to group t.
    std::size_t group_start(std::size_t t) const;
    DominantWeight expand() const;
};

GroupedWeight group(const DominantWeight& lambda);

// True iff all entries are strictly decreasing.
bool is_strongly_dominant(const DominantWeight& lambda);

// Horizontal-strip condition lambda_1 >= mu_1 >= lambda_2 >= ... >= lambda_n >= mu_n.
// Throws LengthMismatchError.
bool interlaces_below(const DominantWeight& lambda, const DominantWeight& mu);

// Exact dimension of the irreducible U(n) representation with highest
// weight lambda: prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
Integer weyl_dimension(const DominantWeight& lambda);

// Exact binomial coefficient; used for dimension counts of symmetric powers.
Integer binomial(std::size_t n, std::size_t k);

} // namespace orbitmult
