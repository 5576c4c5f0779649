#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "fewinv/bigint.hpp"

namespace fewinv {

/// Integer partition; parts stored weakly increasing. The empty partition is valid.
class Partition {
public:
    Partition() = default;

    /// Accepts parts in any order and stores them sorted; throws on parts < 1.
    explicit Partition(std::vector<int> parts);

    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    std::int64_t weight() const;

    /// Weakly increasing listing (storage order).
    const std::vector<int>& parts() const { return parts_; }
    /// Weakly decreasing listing, used when the partition is read as a composition prefix.
    std::vector<int> decreasing_parts() const;

    int largest() const;  // requires nonempty
    int smallest() const; // requires nonempty
    bool has_distinct_parts() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Integer composition: ordered sequence of positive parts. The empty composition is valid.
class Composition {
public:
    Composition() = default;

    /// Throws on parts < 1.
    explicit Composition(std::vector<int> parts);

    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    std::int64_t weight() const;
    const std::vector<int>& parts() const { return parts_; }

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

struct CutResult {
    Partition head;   // longest weakly decreasing prefix
    Composition tail; // remainder; head (decreasing) followed by tail reproduces the input
};

/// Length of the longest strictly increasing prefix; 0 for the empty composition.
int lir(const Composition& m);

CutResult cut(const Composition& m);

/// 0 if |m| <= 1, otherwise max{ m_j - j + 1 : 2 <= j <= |m| } (may be negative).
int dmax(const Composition& m);

/// True iff lambda has distinct parts, lambda nonempty implies largest(lambda) < dmax(mu),
/// and mu nonempty implies mu_1 <= dmax(mu).
bool is_good_pair(const Partition& lambda, const Composition& mu);

struct PentagonalIndex {
    int j = 1;
    std::int64_t u() const { return static_cast<std::int64_t>(j) * (3 * j - 1) / 2; }
    std::int64_t u_prime() const { return static_cast<std::int64_t>(j) * (3 * j + 1) / 2; }
};

/// p(0..n_max) via the pentagonal-number recurrence.
std::vector<Int> partition_counts(int n_max);

/// p(n).
Int partition_count(int n);

/// Sum of the positive divisors of n; throws on n < 1.
Int divisor_sum(int n);

} // namespace fewinv
