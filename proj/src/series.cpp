#include "fewinv/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewinv {

IntegerSeries::IntegerSeries(int order) {
    if (order < 0)
        throw std::invalid_argument("IntegerSeries: negative order");
    coefficients_.assign(static_cast<size_t>(order) + 1, Int(0));
}

IntegerSeries IntegerSeries::constant(const Int& value, int order) {
    IntegerSeries s(order);
    s.coefficients_[0] = value;
    return s;
}

IntegerSeries IntegerSeries::monomial(const Int& coefficient, int degree, int order) {
    if (degree < 0)
        throw std::invalid_argument("IntegerSeries: negative degree");
    IntegerSeries s(order);
    if (degree <= order)
        s.coefficients_[static_cast<size_t>(degree)] = coefficient;
    return s;
}

IntegerSeries IntegerSeries::identity(int order) {
    if (order < 1)
        throw std::invalid_argument("IntegerSeries: identity needs order >= 1");
    return monomial(1, 1, order);
}

IntegerSeries IntegerSeries::from_coefficients(std::vector<Int> coefficients) {
    if (coefficients.empty())
        throw std::invalid_argument("IntegerSeries: empty coefficient list");
    IntegerSeries s(static_cast<int>(coefficients.size()) - 1);
    s.coefficients_ = std::move(coefficients);
    return s;
}

const Int& IntegerSeries::coefficient(int n) const {
    if (n < 0 || n > order())
        throw std::out_of_range("IntegerSeries: coefficient index beyond truncation order");
    return coefficients_[static_cast<size_t>(n)];
}

IntegerSeries IntegerSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("IntegerSeries: truncation must not extend the order");
    IntegerSeries s(new_order);
    std::copy(coefficients_.begin(), coefficients_.begin() + new_order + 1,
              s.coefficients_.begin());
    return s;
}

bool IntegerSeries::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](const Int& c) { return c == 0; });
}

IntegerSeries add(const IntegerSeries& a, const IntegerSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Int> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        c[static_cast<size_t>(n)] = a.coefficient(n) + b.coefficient(n);
    return IntegerSeries::from_coefficients(std::move(c));
}

IntegerSeries sub(const IntegerSeries& a, const IntegerSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Int> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        c[static_cast<size_t>(n)] = a.coefficient(n) - b.coefficient(n);
    return IntegerSeries::from_coefficients(std::move(c));
}

IntegerSeries mul(const IntegerSeries& a, const IntegerSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Int> c(static_cast<size_t>(order) + 1, Int(0));
    for (int i = 0; i <= order; ++i) {
        const Int& ai = a.coefficient(i);
        if (ai == 0)
            continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coefficient(j) == 0)
                continue;
            c[static_cast<size_t>(i + j)] += ai * b.coefficient(j);
        }
    }
    return IntegerSeries::from_coefficients(std::move(c));
}

IntegerSeries inverse(const IntegerSeries& a) {
    const Int& a0 = a.coefficient(0);
    if (a0 != 1 && a0 != -1)
        throw std::invalid_argument("inverse: constant term must be +1 or -1");
    const int order = a.order();
    std::vector<Int> b(static_cast<size_t>(order) + 1, Int(0));
    b[0] = a0; // 1/a0 == a0 for a0 = +-1
    for (int n = 1; n <= order; ++n) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += a.coefficient(k) * b[static_cast<size_t>(n - k)];
        b[static_cast<size_t>(n)] = -a0 * acc;
    }
    return IntegerSeries::from_coefficients(std::move(b));
}

IntegerSeries compose(const IntegerSeries& f, const IntegerSeries& g) {
    if (g.coefficient(0) != 0)
        throw std::invalid_argument("compose: inner series must have zero constant term");
    const int order = std::min(f.order(), g.order());
    // Horner in the truncated ring
    IntegerSeries result = IntegerSeries::constant(f.coefficient(f.order()), order);
    IntegerSeries inner = g.truncated(order);
    for (int k = f.order() - 1; k >= 0; --k) {
        result = mul(result, inner);
        result = add(result, IntegerSeries::constant(f.coefficient(k), order));
    }
    return result;
}

IntegerSeries derivative(const IntegerSeries& a) {
    if (a.order() == 0)
        return IntegerSeries(0);
    std::vector<Int> c(static_cast<size_t>(a.order()));
    for (int n = 1; n <= a.order(); ++n)
        c[static_cast<size_t>(n - 1)] = n * a.coefficient(n);
    return IntegerSeries::from_coefficients(std::move(c));
}

IntegerSeries pointing(const IntegerSeries& a) {
    std::vector<Int> c(static_cast<size_t>(a.order()) + 1);
    for (int n = 0; n <= a.order(); ++n)
        c[static_cast<size_t>(n)] = n * a.coefficient(n);
    return IntegerSeries::from_coefficients(std::move(c));
}

IntegerSeries product_family(int k_max, const std::function<IntegerSeries(int)>& factor,
                             int order) {
    if (k_max < order)
        throw std::invalid_argument("product_family: k_max must cover the truncation order");
    IntegerSeries result = IntegerSeries::constant(1, order);
    for (int k = 1; k <= k_max; ++k) {
        IntegerSeries f = factor(k);
        if (f.coefficient(0) != 1)
            throw std::invalid_argument("product_family: factors must have constant term 1");
        result = mul(result, f.order() == order ? std::move(f) : f.truncated(order));
    }
    return result;
}

IntegerSeries geometric_series(int k, int order) {
    if (k < 1)
        throw std::invalid_argument("geometric_series: exponent step must be >= 1");
    IntegerSeries s(order);
    std::vector<Int> c(static_cast<size_t>(order) + 1, Int(0));
    for (int n = 0; n <= order; n += k)
        c[static_cast<size_t>(n)] = 1;
    return IntegerSeries::from_coefficients(std::move(c));
}

IntegerSeries partition_series(int order) {
    // Multiply the geometric factors in place; factor k only touches n >= k,
    // so the loop is quadratic-with-harmonic-savings rather than cubic.
    std::vector<Int> c(static_cast<size_t>(order) + 1, Int(0));
    c[0] = 1;
    for (int k = 1; k <= order; ++k)
        for (int n = k; n <= order; ++n)
            c[static_cast<size_t>(n)] += c[static_cast<size_t>(n - k)];
    return IntegerSeries::from_coefficients(std::move(c));
}

IntegerSeries euler_product(int order) {
    IntegerSeries result = IntegerSeries::constant(1, order);
    for (int k = 1; k <= order; ++k) {
        IntegerSeries factor = sub(IntegerSeries::constant(1, order),
                                   IntegerSeries::monomial(1, k, order));
        result = mul(result, factor);
    }
    return result;
}

IntegerSeries composition_series(int order) {
    IntegerSeries one_minus_x =
        sub(IntegerSeries::constant(1, order), IntegerSeries::monomial(1, 1, order));
    IntegerSeries one_minus_2x =
        sub(IntegerSeries::constant(1, order), IntegerSeries::monomial(2, 1, order));
    return mul(one_minus_x, inverse(one_minus_2x));
}

IntegerSeries lambert_series(const std::function<Int(int)>& a, int order) {
    std::vector<Int> c(static_cast<size_t>(order) + 1, Int(0));
    for (int k = 1; k <= order; ++k) {
        const Int ak = a(k);
        if (ak == 0)
            continue;
        for (int n = k; n <= order; n += k)
            c[static_cast<size_t>(n)] += ak;
    }
    return IntegerSeries::from_coefficients(std::move(c));
}

} // namespace fewinv
