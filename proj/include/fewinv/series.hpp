#pragma once

#include <functional>
#include <vector>

#include "fewinv/bigint.hpp"

namespace fewinv {

/// Truncated formal power series with exact integer coefficients.
///
/// A series of order N is known modulo x^{N+1} and stores exactly N+1
/// coefficients. Binary operations never extend knowledge: the result order
/// is the minimum of the operand orders.
class IntegerSeries {
public:
    /// Zero series of the given order.
    explicit IntegerSeries(int order);

    static IntegerSeries constant(const Int& value, int order);
    static IntegerSeries monomial(const Int& coefficient, int degree, int order);
    /// x, truncated at the given order (>= 1).
    static IntegerSeries identity(int order);
    /// Order is coefficients.size() - 1; the list must be nonempty.
    static IntegerSeries from_coefficients(std::vector<Int> coefficients);

    int order() const { return static_cast<int>(coefficients_.size()) - 1; }
    /// Throws std::out_of_range for n < 0 or n > order.
    const Int& coefficient(int n) const;
    const std::vector<Int>& coefficients() const { return coefficients_; }

    /// Explicit truncation to a lower (or equal) order.
    IntegerSeries truncated(int new_order) const;

    bool is_zero() const;

    friend bool operator==(const IntegerSeries&, const IntegerSeries&) = default;

private:
    std::vector<Int> coefficients_; // c_0 .. c_order
};

IntegerSeries add(const IntegerSeries& a, const IntegerSeries& b);
IntegerSeries sub(const IntegerSeries& a, const IntegerSeries& b);
/// Cauchy product truncated to the minimum operand order.
IntegerSeries mul(const IntegerSeries& a, const IntegerSeries& b);

inline IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b) { return add(a, b); }
inline IntegerSeries operator-(const IntegerSeries& a, const IntegerSeries& b) { return sub(a, b); }
inline IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b) { return mul(a, b); }

/// Multiplicative inverse. The constant term must be +1 or -1 so the inverse
/// stays integral; throws std::invalid_argument otherwise.
IntegerSeries inverse(const IntegerSeries& a);

/// f(g(x)) truncated to the minimum operand order; g must have zero constant
/// term (throws std::invalid_argument otherwise).
IntegerSeries compose(const IntegerSeries& f, const IntegerSeries& g);

/// d/dx; drops the order by one (a constant of order 0 maps to 0 of order 0).
IntegerSeries derivative(const IntegerSeries& a);

/// x d/dx; multiplies coefficient n by n, preserving the order.
IntegerSeries pointing(const IntegerSeries& a);

/// factor(1) * factor(2) * ... * factor(k_max), truncated at order. Every
/// factor must have constant term 1 and k_max must be >= order so omitted
/// factors cannot affect the truncation; throws std::invalid_argument otherwise.
IntegerSeries product_family(int k_max, const std::function<IntegerSeries(int)>& factor, int order);

/// 1/(1 - x^k).
IntegerSeries geometric_series(int k, int order);

/// Partition generating function: product over k >= 1 of 1/(1 - x^k).
IntegerSeries partition_series(int order);

/// Product over k >= 1 of (1 - x^k); inverse of partition_series.
IntegerSeries euler_product(int order);

/// Composition generating function (1 - x)/(1 - 2x) = 1 + sum 2^{n-1} x^n.
IntegerSeries composition_series(int order);

/// sum_{k >= 1} a(k) x^k / (1 - x^k); coefficient n is sum_{k | n} a(k).
IntegerSeries lambert_series(const std::function<Int(int)>& a, int order);

} // namespace fewinv
