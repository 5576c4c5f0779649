#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace fewinv {

/// A permutation of [n] in one-line notation. The empty permutation is valid.
class Permutation {
public:
    Permutation() = default;

    /// values must be a rearrangement of 1..n; throws std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    const std::vector<int>& values() const { return values_; }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// Sequence b_1..b_n of non-negative integers with b_k < k (1-indexed).
class SubdiagonalSequence {
public:
    SubdiagonalSequence() = default;

    /// Throws std::invalid_argument if any entry violates 0 <= b_k < k.
    explicit SubdiagonalSequence(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    std::int64_t sum() const;
    const std::vector<int>& entries() const { return entries_; }

    friend auto operator<=>(const SubdiagonalSequence&, const SubdiagonalSequence&) = default;

private:
    std::vector<int> entries_;
};

/// Number of pairs i < j with p_i > p_j.
std::int64_t inversions(const Permutation& p);

/// Entry i counts elements left of position i that are larger than p_i.
SubdiagonalSequence inversion_table(const Permutation& p);

/// Partial sums of the inversion table; weakly increasing, last entry = inversions(p).
std::vector<std::int64_t> cumulative_inversion_table(const Permutation& p);

/// Inverse of inversion_table; exact round trip.
Permutation permutation_from_inversion_table(const SubdiagonalSequence& table);

/// Indecomposable blocks, each renumbered to start at 1.
std::vector<Permutation> components(const Permutation& p);

int component_count(const Permutation& p);

/// Concatenation of a with b shifted up by |a|.
Permutation direct_sum(const Permutation& a, const Permutation& b);

} // namespace fewinv
