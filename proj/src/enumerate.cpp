#include "fewinv/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fewinv {

namespace {

void check_bound(int n, int bound, const char* what) {
    if (n < 0)
        throw std::invalid_argument(std::string(what) + ": negative size");
    if (n > bound)
        throw std::invalid_argument(std::string(what) + ": size " + std::to_string(n) +
                                    " exceeds oracle bound " + std::to_string(bound));
}

} // namespace

std::vector<Permutation> enumerate_with_inversions(int n, std::int64_t k, int bound) {
    check_bound(n, bound, "enumerate_with_inversions");
    std::vector<Permutation> result;
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        Permutation p(v);
        if (inversions(p) == k)
            result.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return result;
}

bool in_catalan_set(const Permutation& p) {
    const auto& a = p.values();
    if (a.empty())
        return false; // needs |p|-1 inversions, impossible at length 0
    // prefix of length k has fewer than k inversions, full count is n-1
    std::int64_t running = 0;
    for (size_t j = 0; j < a.size(); ++j) {
        for (size_t i = 0; i < j; ++i)
            if (a[i] > a[j])
                ++running;
        if (running >= static_cast<std::int64_t>(j) + 1)
            return false;
    }
    return running == static_cast<std::int64_t>(a.size()) - 1;
}

std::vector<Permutation> enumerate_catalan_set(int n, int bound) {
    check_bound(n, bound, "enumerate_catalan_set");
    std::vector<Permutation> result;
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        Permutation p(v);
        if (in_catalan_set(p))
            result.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return result;
}

std::vector<Partition> enumerate_partitions(int n, int bound) {
    check_bound(n, bound, "enumerate_partitions");
    std::vector<Partition> result;
    std::vector<int> parts;
    // ascending parts; lexicographic in the weakly increasing listing
    auto recurse = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            result.emplace_back(parts);
            return;
        }
        for (int part = min_part; part <= remaining; ++part) {
            if (2 * part > remaining && part != remaining)
                continue; // no room for a further part >= this one
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    recurse(recurse, n, 1);
    return result;
}

std::vector<Composition> enumerate_compositions(int n, int bound) {
    check_bound(n, bound, "enumerate_compositions");
    std::vector<Composition> result;
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            result.emplace_back(parts);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            parts.push_back(part);
            self(self, remaining - part);
            parts.pop_back();
        }
    };
    recurse(recurse, n);
    return result;
}

std::vector<SubdiagonalSequence> enumerate_subdiagonal_with_sum(int length, std::int64_t sum) {
    if (length < 0 || sum < 0)
        throw std::invalid_argument("enumerate_subdiagonal_with_sum: negative argument");
    std::vector<SubdiagonalSequence> result;
    // max achievable sum from position k+1 (1-indexed) onwards
    std::vector<std::int64_t> slack(static_cast<size_t>(length) + 2, 0);
    for (int k = length; k >= 1; --k)
        slack[static_cast<size_t>(k)] = slack[static_cast<size_t>(k) + 1] + (k - 1);
    std::vector<int> entries;
    auto recurse = [&](auto&& self, int position, std::int64_t remaining) -> void {
        if (position > length) {
            if (remaining == 0)
                result.emplace_back(entries);
            return;
        }
        if (remaining > slack[static_cast<size_t>(position)])
            return;
        const int cap = static_cast<int>(std::min<std::int64_t>(position - 1, remaining));
        for (int value = 0; value <= cap; ++value) {
            entries.push_back(value);
            self(self, position + 1, remaining - value);
            entries.pop_back();
        }
    };
    recurse(recurse, 1, sum);
    return result;
}

Int count_weakly_increasing_subdiagonal(int n) {
    if (n < 0)
        throw std::invalid_argument("count_weakly_increasing_subdiagonal: negative length");
    Int count = 0;
    std::vector<int> entries;
    auto recurse = [&](auto&& self, int position, int floor) -> void {
        if (position > n) {
            ++count;
            return;
        }
        for (int value = floor; value <= position - 1; ++value)
            self(self, position + 1, value);
    };
    recurse(recurse, 1, 0);
    return count;
}

} // namespace fewinv
