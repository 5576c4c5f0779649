#include "fewinv/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewinv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1)
            throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end());
}

std::int64_t Partition::weight() const {
    std::int64_t w = 0;
    for (int p : parts_)
        w += p;
    return w;
}

std::vector<int> Partition::decreasing_parts() const {
    return {parts_.rbegin(), parts_.rend()};
}

int Partition::largest() const {
    if (empty())
        throw std::invalid_argument("Partition: largest() of empty partition");
    return parts_.back();
}

int Partition::smallest() const {
    if (empty())
        throw std::invalid_argument("Partition: smallest() of empty partition");
    return parts_.front();
}

bool Partition::has_distinct_parts() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1)
            throw std::invalid_argument("Composition: parts must be positive");
}

std::int64_t Composition::weight() const {
    std::int64_t w = 0;
    for (int p : parts_)
        w += p;
    return w;
}

int lir(const Composition& m) {
    const auto& parts = m.parts();
    if (parts.empty())
        return 0;
    int length = 1;
    while (length < static_cast<int>(parts.size()) &&
           parts[static_cast<size_t>(length) - 1] < parts[static_cast<size_t>(length)])
        ++length;
    return length;
}

CutResult cut(const Composition& m) {
    const auto& parts = m.parts();
    size_t head_length = parts.empty() ? 0 : 1;
    while (head_length < parts.size() && parts[head_length - 1] >= parts[head_length])
        ++head_length;
    std::vector<int> head(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(head_length));
    std::vector<int> tail(parts.begin() + static_cast<std::ptrdiff_t>(head_length), parts.end());
    return {Partition(std::move(head)), Composition(std::move(tail))};
}

int dmax(const Composition& m) {
    const auto& parts = m.parts();
    if (parts.size() <= 1)
        return 0;
    int best = parts[1] - 1; // j = 2
    for (size_t j = 3; j <= parts.size(); ++j)
        best = std::max(best, parts[j - 1] - static_cast<int>(j) + 1);
    return best;
}

bool is_good_pair(const Partition& lambda, const Composition& mu) {
    if (!lambda.has_distinct_parts())
        return false;
    const int d = dmax(mu);
    if (!lambda.empty() && lambda.largest() >= d)
        return false;
    if (!mu.empty() && mu.parts().front() > d)
        return false;
    return true;
}

std::vector<Int> partition_counts(int n_max) {
    std::vector<Int> p(static_cast<size_t>(std::max(n_max, 0)) + 1);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        Int value = 0;
        for (PentagonalIndex idx{1}; idx.u() <= n; ++idx.j) {
            const int sign = idx.j % 2 == 1 ? 1 : -1;
            value += sign * p[static_cast<size_t>(n - idx.u())];
            if (idx.u_prime() <= n)
                value += sign * p[static_cast<size_t>(n - idx.u_prime())];
        }
        p[static_cast<size_t>(n)] = value;
    }
    return p;
}

Int partition_count(int n) {
    if (n < 0)
        throw std::invalid_argument("partition_count: negative argument");
    return partition_counts(n).back();
}

Int divisor_sum(int n) {
    if (n < 1)
        throw std::invalid_argument("divisor_sum: argument must be positive");
    Int sum = 0;
    for (int d = 1; static_cast<std::int64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            sum += d;
            if (d != n / d)
                sum += n / d;
        }
    }
    return sum;
}

} // namespace fewinv
