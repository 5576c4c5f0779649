#pragma once

#include <cstdint>
#include <vector>

#include "fewinv/bigint.hpp"
#include "fewinv/series.hpp"

namespace fewinv {

/// Inversion-count distribution table: row n holds I_n(0..n(n-1)/2), the
/// number of permutations of [n] by inversion count. Rows are palindromic
/// and sum to n!.
class MahonianTable {
public:
    explicit MahonianTable(int n_max);

    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<Int>& row(int n) const;
    /// I_n(k); zero outside 0 <= k <= n(n-1)/2.
    Int entry(int n, std::int64_t k) const;

private:
    std::vector<std::vector<Int>> rows_;
};

/// Closed form for I_n(k), valid for 0 <= k <= n (throws std::invalid_argument
/// outside that range). Terms with a negative lower binomial index vanish and
/// terminate the two pentagonal sums.
Int knuth_netto(int n, std::int64_t k);

/// binom(2n, n)/(n + 1), exact.
Int catalan_number(int n);

/// Catalan generating function via the convolution recurrence.
IntegerSeries catalan_series(int order);

/// How to build S_i(x) = sum_n I_n(n-i) x^n.
enum class SubdiagonalMethod {
    dp_diagonal,   // read I_n(n-i) off the table
    catalan_shift, // (xC)^i * S_0
    via_r          // (xC)^i * R(xC)
};

IntegerSeries subdiagonal_series(int i, int order,
                                 SubdiagonalMethod method = SubdiagonalMethod::dp_diagonal);

/// How to build R(x).
enum class RConstruction {
    product,             // (1-x)/(1-2x) * inverse(Par)
    inverse_one_minus_m, // 1/(1 - M(x))
    divisor_recursion    // n r_n = sum_k r_{n-k} (2^k - sigma(k) - 1)
};

/// The divisor recursion asserts exact divisibility at every step and throws
/// std::logic_error on failure (which would falsify the identity it encodes).
IntegerSeries r_series(int order, RConstruction method = RConstruction::product);

/// M(x) = 1 + (x/(1-x) - 1) Par(x); coefficient n (n >= 1) equals
/// p(0)+...+p(n-1) - p(n), constant term 0.
IntegerSeries m_series(int order);

/// True iff [x^n] x R'(x)/R(x) == 2^n - sigma(n) - 1 for 1 <= n <= order,
/// with sigma checked both directly and as a Lambert-series coefficient.
bool log_derivative_check(int order);

/// True iff [x^n] x M'(x)/(1 - M(x)) == 2^n - sigma(n) - 1 for 1 <= n <= order.
bool pointed_structure_check(int order);

/// [x^n] R(x) as the cycle-type average over partitions of n: it sums
/// prod_i (2^{l_i} - sigma(l_i) - 1) / z_lambda in exact rationals and
/// asserts integrality (std::logic_error on failure). Guarded to n <= 30.
Int cycle_type_formula(int n);

} // namespace fewinv
