#include "fewinv/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fewinv {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: values must be a rearrangement of 1..n");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

SubdiagonalSequence::SubdiagonalSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0 || entries_[i] > static_cast<int>(i))
            throw std::invalid_argument("SubdiagonalSequence: entry k must satisfy 0 <= b_k < k");
    }
}

std::int64_t SubdiagonalSequence::sum() const {
    std::int64_t s = 0;
    for (int e : entries_)
        s += e;
    return s;
}

std::int64_t inversions(const Permutation& p) {
    const auto& a = p.values();
    std::int64_t count = 0;
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            if (a[i] > a[j])
                ++count;
    return count;
}

SubdiagonalSequence inversion_table(const Permutation& p) {
    const auto& a = p.values();
    std::vector<int> b(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        int larger = 0;
        for (size_t j = 0; j < i; ++j)
            if (a[j] > a[i])
                ++larger;
        b[i] = larger;
    }
    return SubdiagonalSequence(std::move(b));
}

std::vector<std::int64_t> cumulative_inversion_table(const Permutation& p) {
    const auto table = inversion_table(p);
    std::vector<std::int64_t> sums(table.entries().size());
    std::int64_t running = 0;
    for (size_t i = 0; i < sums.size(); ++i) {
        running += table.entries()[i];
        sums[i] = running;
    }
    return sums;
}

Permutation permutation_from_inversion_table(const SubdiagonalSequence& table) {
    const auto& b = table.entries();
    const int n = static_cast<int>(b.size());
    // Filling positions right to left, b_i says the value at position i is the
    // (b_i + 1)-th largest among the values not placed yet.
    std::vector<int> remaining(static_cast<size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 1); // increasing
    std::vector<int> a(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const size_t pick = remaining.size() - 1 - static_cast<size_t>(b[static_cast<size_t>(i)]);
        a[static_cast<size_t>(i)] = remaining[pick];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Permutation(std::move(a));
}

std::vector<Permutation> components(const Permutation& p) {
    const auto& a = p.values();
    std::vector<Permutation> result;
    size_t start = 0;
    int prefix_max = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        prefix_max = std::max(prefix_max, a[i]);
        if (prefix_max == static_cast<int>(i) + 1) {
            // block [start, i] uses exactly the values start+1 .. i+1
            std::vector<int> block(a.begin() + static_cast<std::ptrdiff_t>(start),
                                   a.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            for (int& v : block)
                v -= static_cast<int>(start);
            result.emplace_back(std::move(block));
            start = i + 1;
        }
    }
    return result;
}

int component_count(const Permutation& p) {
    return static_cast<int>(components(p).size());
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v = a.values();
    v.reserve(a.values().size() + b.values().size());
    const int shift = a.size();
    for (int x : b.values())
        v.push_back(x + shift);
    return Permutation(std::move(v));
}

} // namespace fewinv
