#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "fewinv/partition.hpp"
#include "fewinv/permutation.hpp"

namespace fewinv {

inline constexpr int kSignedTupleBound = 12;
inline constexpr int kMarkedPairBound = 12;
inline constexpr int kGoodPairBound = 14;

/// Ordered list of nonempty partitions plus a trailing composition; the sign
/// is (-1)^{number of partitions}.
class SignedTuple {
public:
    SignedTuple() = default;

    /// Throws std::invalid_argument if any listed partition is empty.
    SignedTuple(std::vector<Partition> partitions, Composition tail);

    const std::vector<Partition>& partitions() const { return partitions_; }
    const Composition& tail() const { return tail_; }
    int sign() const { return partitions_.size() % 2 == 0 ? 1 : -1; }
    std::int64_t weight() const;

    friend auto operator<=>(const SignedTuple&, const SignedTuple&) = default;

private:
    std::vector<Partition> partitions_;
    Composition tail_;
};

/// Mark set S plus a subdiagonal sequence beta whose entry sum equals its
/// length; weight n = |beta| + |S|, sign (-1)^{|S|}.
class MarkedPair {
public:
    MarkedPair() = default;

    /// marks may come in any order; validated to be distinct and within
    /// 1..|beta|, and beta must have entry sum |beta|.
    MarkedPair(std::vector<int> marks, SubdiagonalSequence beta);

    const std::vector<int>& marks() const { return marks_; } // sorted increasing
    const SubdiagonalSequence& beta() const { return beta_; }
    bool marked(int index) const; // 1-indexed
    int sign() const { return marks_.size() % 2 == 0 ? 1 : -1; }
    int weight() const { return beta_.size() + static_cast<int>(marks_.size()); }

    friend auto operator<=>(const MarkedPair&, const MarkedPair&) = default;

private:
    std::vector<int> marks_;
    SubdiagonalSequence beta_;
};

/// Distinct-part partition lambda and composition mu with
/// largest(lambda) < dmax(mu) and mu_1 <= dmax(mu); sign (-1)^{|lambda|}.
class GoodPair {
public:
    GoodPair() = default;

    /// Throws std::invalid_argument unless is_good_pair(lambda, mu).
    GoodPair(Partition lambda, Composition mu);

    const Partition& lambda() const { return lambda_; }
    const Composition& mu() const { return mu_; }
    int sign() const { return lambda_.size() % 2 == 0 ? 1 : -1; }
    std::int64_t weight() const { return lambda_.weight() + mu_.weight(); }

    friend auto operator<=>(const GoodPair&, const GoodPair&) = default;

private:
    Partition lambda_;
    Composition mu_;
};

struct Factorization {
    Permutation sigma; // prefix, a permutation of [k] with inv = k - i
    Permutation tau;   // suffix renumbered to [n-k]; lies in the Catalan set
};

/// All signed tuples of weight n, sorted; sum of signs is [x^n] R(x).
std::vector<SignedTuple> enumerate_signed_tuples(int n, int bound = kSignedTupleBound);

/// Sign-reversing involution on signed tuples: moves a partition between the
/// list and the front of the composition, steered by the parity of lir.
SignedTuple phi(const SignedTuple& t);

/// The compositions mu of n with lir(mu) even; count is [x^n] R(x).
std::vector<Composition> phi_fixed_points(int n, int bound = kSignedTupleBound);

/// All marked pairs of weight n, sorted; sum of signs is [x^n] R(x).
std::vector<MarkedPair> enumerate_marked_pairs(int n, int bound = kMarkedPairBound);

/// Sign-reversing involution on marked pairs: scanning indices in descending
/// order, the first applicable of four mutually exclusive rewrite cases fires
/// (mark <-> bigram exchanges preserving weight); otherwise fixed point.
MarkedPair psi(const MarkedPair& p);

/// Maps a psi-fixed point, factored as sigma tau zeta, to the good pair
/// (marked indices of sigma, tau). Throws std::invalid_argument unless the
/// input is a fixed point of psi.
GoodPair theta(const MarkedPair& p);

/// Inverse of theta: rebuilds sigma of length dmax(mu) with marked diagonal
/// entries at the parts of lambda, then tau = mu and a zero tail.
MarkedPair theta_inverse(const GoodPair& g);

/// All good pairs of weight n, sorted by (lambda, mu).
std::vector<GoodPair> enumerate_good_pairs(int n, int bound = kGoodPairBound);

struct GoodPairClass {
    int ell = 0;                   // largest k with (mu_1..mu_k, rest) still good
    std::vector<GoodPair> members; // k = 0..ell
};

/// Equivalence class of the representative (epsilon, mu) under moving parts
/// between lambda and mu. Throws std::invalid_argument unless (epsilon, mu)
/// is a good pair.
GoodPairClass class_ladder(const Composition& mu);

/// Splits p with inv(p) = |p| - i - 1 at the longest prefix sigma with
/// inv(sigma) = |sigma| - i. Throws std::invalid_argument if the inversion
/// count violates the precondition, and std::logic_error if the split does
/// not have the guaranteed shape (sigma a permutation of an initial segment,
/// renumbered suffix in the Catalan set).
Factorization factor_few_inversions(const Permutation& p, int i);

/// True iff m has length >= 2, m_1 < m_2, and is weakly decreasing from m_2 on.
bool is_m_block(const Composition& m);

/// Unique factorization of a composition with even lir into such blocks;
/// each block ends right before the next ascent at position >= 2.
/// Throws std::invalid_argument when lir(mu) is odd.
std::vector<Composition> m_block_factorization(const Composition& mu);

} // namespace fewinv
