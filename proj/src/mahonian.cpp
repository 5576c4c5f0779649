#include "fewinv/mahonian.hpp"

#include <map>
#include <stdexcept>

#include "fewinv/enumerate.hpp"
#include "fewinv/partition.hpp"

namespace fewinv {

MahonianTable::MahonianTable(int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("MahonianTable: negative n_max");
    rows_.reserve(static_cast<size_t>(n_max) + 1);
    rows_.push_back({Int(1)});
    for (int n = 1; n <= n_max; ++n) {
        const auto& prev = rows_.back();
        const size_t length = static_cast<size_t>(n) * (n - 1) / 2 + 1;
        // row n = row n-1 times (1 + x + ... + x^{n-1}): sliding window of width n
        std::vector<Int> prefix(prev.size() + 1);
        prefix[0] = 0;
        for (size_t i = 0; i < prev.size(); ++i)
            prefix[i + 1] = prefix[i] + prev[i];
        std::vector<Int> row(length);
        for (size_t k = 0; k < length; ++k) {
            const size_t hi = std::min(k, prev.size() - 1) + 1;
            const size_t lo = k >= static_cast<size_t>(n) ? k - n + 1 : 0;
            row[k] = prefix[hi] - prefix[lo];
        }
        rows_.push_back(std::move(row));
    }
}

const std::vector<Int>& MahonianTable::row(int n) const {
    if (n < 0 || n > n_max())
        throw std::out_of_range("MahonianTable: row index out of range");
    return rows_[static_cast<size_t>(n)];
}

Int MahonianTable::entry(int n, std::int64_t k) const {
    const auto& r = row(n);
    if (k < 0 || k >= static_cast<std::int64_t>(r.size()))
        return 0;
    return r[static_cast<size_t>(k)];
}

Int knuth_netto(int n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("knuth_netto: requires 0 <= k <= n");
    Int result = binomial(n + k - 1, k);
    for (PentagonalIndex idx{1};; ++idx.j) {
        const std::int64_t u = idx.u();
        if (k - u < 0)
            break; // both lower indices stay negative from here on
        const int sign = idx.j % 2 == 1 ? -1 : 1;
        result += sign * binomial(n + k - u - idx.j - 1, k - u - idx.j);
        result += sign * binomial(n + k - u - 1, k - u);
    }
    return result;
}

Int catalan_number(int n) {
    if (n < 0)
        throw std::invalid_argument("catalan_number: negative argument");
    Int c = binomial(2LL * n, n);
    c /= n + 1; // exact
    return c;
}

IntegerSeries catalan_series(int order) {
    std::vector<Int> c(static_cast<size_t>(order) + 1, Int(0));
    c[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Int acc = 0;
        for (int i = 0; i < n; ++i)
            acc += c[static_cast<size_t>(i)] * c[static_cast<size_t>(n - 1 - i)];
        c[static_cast<size_t>(n)] = acc;
    }
    return IntegerSeries::from_coefficients(std::move(c));
}

namespace {

IntegerSeries x_times_catalan(int order) {
    IntegerSeries c = catalan_series(order);
    std::vector<Int> shifted(static_cast<size_t>(order) + 1, Int(0));
    for (int n = 1; n <= order; ++n)
        shifted[static_cast<size_t>(n)] = c.coefficient(n - 1);
    return IntegerSeries::from_coefficients(std::move(shifted));
}

IntegerSeries s0_from_table(int order) {
    MahonianTable table(order);
    std::vector<Int> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        c[static_cast<size_t>(n)] = table.entry(n, n);
    return IntegerSeries::from_coefficients(std::move(c));
}

Int two_pow_minus_sigma_minus_one(int n) {
    return power_of_two(n) - divisor_sum(n) - 1;
}

} // namespace

IntegerSeries subdiagonal_series(int i, int order, SubdiagonalMethod method) {
    if (i < 0)
        throw std::invalid_argument("subdiagonal_series: negative diagonal index");
    switch (method) {
    case SubdiagonalMethod::dp_diagonal: {
        MahonianTable table(order);
        std::vector<Int> c(static_cast<size_t>(order) + 1, Int(0));
        for (int n = i; n <= order; ++n)
            c[static_cast<size_t>(n)] = table.entry(n, n - i);
        return IntegerSeries::from_coefficients(std::move(c));
    }
    case SubdiagonalMethod::catalan_shift: {
        IntegerSeries result = s0_from_table(order);
        const IntegerSeries xc = x_times_catalan(order);
        for (int step = 0; step < i; ++step)
            result = mul(xc, result);
        return result;
    }
    case SubdiagonalMethod::via_r: {
        const IntegerSeries xc = x_times_catalan(order);
        IntegerSeries result = compose(r_series(order), xc);
        for (int step = 0; step < i; ++step)
            result = mul(xc, result);
        return result;
    }
    }
    throw std::invalid_argument("subdiagonal_series: unknown method");
}

IntegerSeries r_series(int order, RConstruction method) {
    switch (method) {
    case RConstruction::product:
        return mul(composition_series(order), inverse(partition_series(order)));
    case RConstruction::inverse_one_minus_m:
        return inverse(sub(IntegerSeries::constant(1, order), m_series(order)));
    case RConstruction::divisor_recursion: {
        std::vector<Int> r(static_cast<size_t>(order) + 1, Int(0));
        r[0] = 1;
        for (int n = 1; n <= order; ++n) {
            Int acc = 0;
            for (int k = 1; k <= n; ++k)
                acc += r[static_cast<size_t>(n - k)] * two_pow_minus_sigma_minus_one(k);
            if (acc % n != 0)
                throw std::logic_error("r_series: divisor recursion produced a non-integer");
            r[static_cast<size_t>(n)] = acc / n;
        }
        return IntegerSeries::from_coefficients(std::move(r));
    }
    }
    throw std::invalid_argument("r_series: unknown method");
}

IntegerSeries m_series(int order) {
    const IntegerSeries one = IntegerSeries::constant(1, order);
    // x/(1-x) = 1/(1-x) - 1
    IntegerSeries x_over = sub(geometric_series(1, order), one);
    return add(one, mul(sub(x_over, one), partition_series(order)));
}

bool log_derivative_check(int order) {
    const IntegerSeries r = r_series(order);
    const IntegerSeries lhs = mul(pointing(r), inverse(r));
    const IntegerSeries sigma_via_lambert =
        lambert_series([](int k) { return Int(k); }, order);
    for (int n = 1; n <= order; ++n) {
        if (sigma_via_lambert.coefficient(n) != divisor_sum(n))
            return false;
        if (lhs.coefficient(n) != two_pow_minus_sigma_minus_one(n))
            return false;
    }
    return true;
}

bool pointed_structure_check(int order) {
    const IntegerSeries m = m_series(order);
    const IntegerSeries lhs =
        mul(pointing(m), inverse(sub(IntegerSeries::constant(1, order), m)));
    for (int n = 1; n <= order; ++n)
        if (lhs.coefficient(n) != two_pow_minus_sigma_minus_one(n))
            return false;
    return true;
}

Int cycle_type_formula(int n) {
    if (n < 0 || n > 30)
        throw std::invalid_argument("cycle_type_formula: n must be in 0..30");
    Rational total = 0;
    for (const Partition& lambda : enumerate_partitions(n, /*bound=*/30)) {
        Int numerator = 1;
        for (int part : lambda.parts())
            numerator *= two_pow_minus_sigma_minus_one(part);
        if (numerator == 0)
            continue;
        std::map<int, int> multiplicity;
        for (int part : lambda.parts())
            ++multiplicity[part];
        Int z = 1;
        for (const auto& [part, count] : multiplicity) {
            for (int c = 0; c < count; ++c)
                z *= part;
            z *= factorial(count);
        }
        total += Rational(numerator, z);
    }
    if (denominator(total) != 1)
        throw std::logic_error("cycle_type_formula: non-integral cycle-type average");
    return numerator(total);
}

} // namespace fewinv
