#pragma once

#include <cstdint>
#include <vector>

#include "fewinv/bigint.hpp"
#include "fewinv/partition.hpp"
#include "fewinv/permutation.hpp"

namespace fewinv {

// Brute-force enumerators. They are the oracles everything else is checked
// against, so they stay naive on purpose; the bounds guard against
// combinatorial explosion and throw std::invalid_argument when exceeded.

inline constexpr int kPermutationOracleBound = 9;
inline constexpr int kPartitionOracleBound = 14;

/// All permutations of [n] with exactly k inversions, lexicographic.
std::vector<Permutation> enumerate_with_inversions(int n, std::int64_t k,
                                                   int bound = kPermutationOracleBound);

/// True iff p has |p|-1 inversions and every nonempty length-k prefix has
/// fewer than k inversions. False for the empty permutation (it has 0, not
/// -1, inversions), which is also what the counting identities need.
bool in_catalan_set(const Permutation& p);

/// The permutations above, lexicographic; count is Catalan(n-1) for n >= 1.
std::vector<Permutation> enumerate_catalan_set(int n, int bound = kPermutationOracleBound);

/// All partitions of n, lexicographic in the weakly increasing listing.
std::vector<Partition> enumerate_partitions(int n, int bound = kPartitionOracleBound);

/// All compositions of n, lexicographic.
std::vector<Composition> enumerate_compositions(int n, int bound = kPartitionOracleBound);

/// All subdiagonal sequences of the given length with the given entry sum,
/// lexicographic. Unbounded: callers guard (used for lengths <= 12).
std::vector<SubdiagonalSequence> enumerate_subdiagonal_with_sum(int length, std::int64_t sum);

/// Number of weakly increasing subdiagonal sequences of length n, by enumeration.
Int count_weakly_increasing_subdiagonal(int n);

} // namespace fewinv
