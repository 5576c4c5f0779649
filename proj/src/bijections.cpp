#include "fewinv/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "fewinv/enumerate.hpp"

namespace fewinv {

SignedTuple::SignedTuple(std::vector<Partition> partitions, Composition tail)
    : partitions_(std::move(partitions)), tail_(std::move(tail)) {
    for (const Partition& p : partitions_)
        if (p.empty())
            throw std::invalid_argument("SignedTuple: listed partitions must be nonempty");
}

std::int64_t SignedTuple::weight() const {
    std::int64_t w = tail_.weight();
    for (const Partition& p : partitions_)
        w += p.weight();
    return w;
}

MarkedPair::MarkedPair(std::vector<int> marks, SubdiagonalSequence beta)
    : marks_(std::move(marks)), beta_(std::move(beta)) {
    std::sort(marks_.begin(), marks_.end());
    if (std::adjacent_find(marks_.begin(), marks_.end()) != marks_.end())
        throw std::invalid_argument("MarkedPair: marks must be distinct");
    for (int m : marks_)
        if (m < 1 || m > beta_.size())
            throw std::invalid_argument("MarkedPair: marks must lie in 1..|beta|");
    if (beta_.sum() != beta_.size())
        throw std::invalid_argument("MarkedPair: beta must have entry sum equal to its length");
}

bool MarkedPair::marked(int index) const {
    return std::binary_search(marks_.begin(), marks_.end(), index);
}

GoodPair::GoodPair(Partition lambda, Composition mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    if (!is_good_pair(lambda_, mu_))
        throw std::invalid_argument("GoodPair: conditions violated");
}

namespace {

void check_weight_bound(int n, int bound, const char* what) {
    if (n < 0)
        throw std::invalid_argument(std::string(what) + ": negative weight");
    if (n > bound)
        throw std::invalid_argument(std::string(what) + ": weight " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(bound));
}

} // namespace

std::vector<SignedTuple> enumerate_signed_tuples(int n, int bound) {
    check_weight_bound(n, bound, "enumerate_signed_tuples");
    // lists[w] = all ordered lists of nonempty partitions with total weight w
    std::vector<std::vector<std::vector<Partition>>> lists(static_cast<size_t>(n) + 1);
    lists[0] = {{}};
    std::vector<std::vector<Partition>> partitions_of(static_cast<size_t>(n) + 1);
    for (int a = 1; a <= n; ++a)
        partitions_of[static_cast<size_t>(a)] = enumerate_partitions(a, bound);
    for (int w = 1; w <= n; ++w)
        for (int a = 1; a <= w; ++a)
            for (const Partition& first : partitions_of[static_cast<size_t>(a)])
                for (const auto& rest : lists[static_cast<size_t>(w - a)]) {
                    std::vector<Partition> list;
                    list.reserve(rest.size() + 1);
                    list.push_back(first);
                    list.insert(list.end(), rest.begin(), rest.end());
                    lists[static_cast<size_t>(w)].push_back(std::move(list));
                }
    std::vector<SignedTuple> result;
    for (int m = 0; m <= n; ++m)
        for (const Composition& tail : enumerate_compositions(m, bound))
            for (const auto& list : lists[static_cast<size_t>(n - m)])
                result.emplace_back(list, tail);
    std::sort(result.begin(), result.end(), [](const SignedTuple& a, const SignedTuple& b) {
        if (a.partitions().size() != b.partitions().size())
            return a.partitions().size() < b.partitions().size();
        return a < b;
    });
    return result;
}

SignedTuple phi(const SignedTuple& t) {
    const Composition& mu = t.tail();
    if (lir(mu) % 2 == 0) {
        if (t.partitions().empty())
            return t; // fixed point
        // move the last partition onto the front of the composition
        std::vector<Partition> list = t.partitions();
        const Partition moved = list.back();
        list.pop_back();
        std::vector<int> parts = moved.decreasing_parts();
        parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
        return SignedTuple(std::move(list), Composition(std::move(parts)));
    }
    // lir odd (so mu is nonempty): split off the weakly decreasing head rho.x
    const CutResult c = cut(mu);
    std::vector<Partition> list = t.partitions();
    if (lir(c.tail) % 2 == 0) {
        list.push_back(c.head);
        return SignedTuple(std::move(list), c.tail);
    }
    // keep the head's smallest element x on the composition
    std::vector<int> head = c.head.decreasing_parts();
    const int x = head.back();
    head.pop_back();
    if (head.empty())
        // a singleton head forces lir(tail) = lir(mu) - 1, which is even
        throw std::logic_error("phi: singleton head with odd tail cannot occur");
    list.emplace_back(std::move(head));
    std::vector<int> tail_parts{x};
    tail_parts.insert(tail_parts.end(), c.tail.parts().begin(), c.tail.parts().end());
    return SignedTuple(std::move(list), Composition(std::move(tail_parts)));
}

std::vector<Composition> phi_fixed_points(int n, int bound) {
    check_weight_bound(n, bound, "phi_fixed_points");
    std::vector<Composition> result;
    for (Composition& m : enumerate_compositions(n, bound))
        if (lir(m) % 2 == 0)
            result.push_back(std::move(m));
    return result;
}

std::vector<MarkedPair> enumerate_marked_pairs(int n, int bound) {
    check_weight_bound(n, bound, "enumerate_marked_pairs");
    std::vector<MarkedPair> result;
    for (int k = 0; k <= n; ++k) {
        const int r = n - k;
        if (k > r)
            continue; // need k distinct marks within 1..r
        const auto sequences = enumerate_subdiagonal_with_sum(r, r);
        if (sequences.empty())
            continue;
        // all k-subsets of 1..r
        std::vector<std::vector<int>> mark_sets;
        std::vector<int> current;
        auto choose = [&](auto&& self, int next) -> void {
            if (static_cast<int>(current.size()) == k) {
                mark_sets.push_back(current);
                return;
            }
            for (int m = next; m <= r - (k - static_cast<int>(current.size())) + 1; ++m) {
                current.push_back(m);
                self(self, m + 1);
                current.pop_back();
            }
        };
        choose(choose, 1);
        for (const auto& beta : sequences)
            for (const auto& marks : mark_sets)
                result.emplace_back(marks, beta);
    }
    std::sort(result.begin(), result.end(), [](const MarkedPair& a, const MarkedPair& b) {
        if (a.marks().size() != b.marks().size())
            return a.marks().size() < b.marks().size();
        if (a.beta() != b.beta())
            return a.beta() < b.beta();
        return a.marks() < b.marks();
    });
    return result;
}

namespace {

struct Letter {
    int value = 0;
    bool marked = false;
};

std::vector<Letter> to_letters(const MarkedPair& p) {
    std::vector<Letter> w(p.beta().entries().size());
    for (size_t i = 0; i < w.size(); ++i)
        w[i].value = p.beta().entries()[i];
    for (int m : p.marks())
        w[static_cast<size_t>(m) - 1].marked = true;
    return w;
}

MarkedPair from_letters(const std::vector<Letter>& w) {
    std::vector<int> values(w.size());
    std::vector<int> marks;
    for (size_t i = 0; i < w.size(); ++i) {
        values[i] = w[i].value;
        if (w[i].marked)
            marks.push_back(static_cast<int>(i) + 1);
    }
    return MarkedPair(std::move(marks), SubdiagonalSequence(std::move(values)));
}

} // namespace

MarkedPair psi(const MarkedPair& p) {
    std::vector<Letter> w = to_letters(p);
    const int r = static_cast<int>(w.size());
    auto value = [&](int i) { return w[static_cast<size_t>(i) - 1].value; };     // 1-indexed
    auto marked = [&](int i) { return w[static_cast<size_t>(i) - 1].marked; };   // 1-indexed
    auto is_zero_ascent = [&](int j) { return j >= 1 && j < r && value(j) == 0 && value(j + 1) > 0; };

    // suffix lookups: a 0-ascent strictly right of i / a diagonal index strictly right of i
    std::vector<char> ascent_after(static_cast<size_t>(r) + 2, 0);
    std::vector<char> diagonal_after(static_cast<size_t>(r) + 2, 0);
    for (int i = r - 1; i >= 0; --i) {
        ascent_after[static_cast<size_t>(i)] =
            ascent_after[static_cast<size_t>(i) + 1] || is_zero_ascent(i + 1);
        diagonal_after[static_cast<size_t>(i)] =
            diagonal_after[static_cast<size_t>(i) + 1] || value(i + 1) == i;
    }

    for (int i = r; i >= 1; --i) {
        const bool case1 = marked(i) && !ascent_after[static_cast<size_t>(i)];
        const bool case2 = marked(i) && value(i) != i - 1 && ascent_after[static_cast<size_t>(i)];
        const bool case3 = !marked(i) && is_zero_ascent(i) && !marked(i + 1) &&
                           !diagonal_after[static_cast<size_t>(i) + 1];
        const bool case4 = !marked(i) && value(i) != 0 && value(r) == 0 &&
                           ascent_after[static_cast<size_t>(i)];
        if (static_cast<int>(case1) + case2 + case3 + case4 > 1)
            throw std::logic_error("psi: cases are not mutually exclusive");
        const auto at = w.begin() + (i - 1);
        if (case1) { // marked entry -> unmarked bigram 0,(b+1)
            const int v = at->value;
            *at = {0, false};
            w.insert(at + 1, {v + 1, false});
            return from_letters(w);
        }
        if (case2) { // marked non-diagonal entry -> unmarked b+1, trailing zero
            *at = {at->value + 1, false};
            w.push_back({0, false});
            return from_letters(w);
        }
        if (case3) { // unmarked bigram 0,y at a 0-ascent -> single marked y-1
            const int y = (at + 1)->value;
            *at = {y - 1, true};
            w.erase(at + 1);
            return from_letters(w);
        }
        if (case4) { // unmarked b != 0 with trailing zero -> marked b-1, drop the zero
            *at = {at->value - 1, true};
            w.pop_back();
            return from_letters(w);
        }
    }
    return p; // fixed point
}

GoodPair theta(const MarkedPair& p) {
    if (psi(p) != p)
        throw std::invalid_argument("theta: input is not a fixed point of psi");
    const auto& beta = p.beta().entries();
    if (beta.empty())
        return GoodPair();
    // factor beta as sigma tau zeta: sigma ends at the rightmost 0-ascent,
    // tau is the following run of positive entries, zeta the zero tail
    int ascent = 0;
    for (int i = 1; i < static_cast<int>(beta.size()); ++i)
        if (beta[static_cast<size_t>(i) - 1] == 0 && beta[static_cast<size_t>(i)] > 0)
            ascent = i;
    if (ascent == 0)
        throw std::logic_error("theta: nonempty fixed point without a 0-ascent");
    size_t tau_end = static_cast<size_t>(ascent);
    while (tau_end < beta.size() && beta[tau_end] > 0)
        ++tau_end;
    for (size_t i = tau_end; i < beta.size(); ++i)
        if (beta[i] != 0)
            throw std::logic_error("theta: trailing segment of a fixed point must be zero");
    for (int m : p.marks())
        if (m > ascent)
            throw std::logic_error("theta: marks of a fixed point must lie in the prefix");
    std::vector<int> tau(beta.begin() + ascent, beta.begin() + static_cast<std::ptrdiff_t>(tau_end));
    return GoodPair(Partition(p.marks()), Composition(std::move(tau)));
}

MarkedPair theta_inverse(const GoodPair& g) {
    const std::int64_t n = g.weight();
    if (g.mu().empty())
        return MarkedPair(); // goodness forces lambda empty as well; weight 0
    const int k = dmax(g.mu());
    std::vector<int> beta;
    beta.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= k; ++i)
        beta.push_back(0);
    for (int part : g.lambda().parts())
        beta[static_cast<size_t>(part) - 1] = part - 1; // marked diagonal entry
    beta.insert(beta.end(), g.mu().parts().begin(), g.mu().parts().end());
    const std::int64_t zeros = n - g.lambda().size() - static_cast<std::int64_t>(beta.size());
    if (zeros < 0)
        throw std::logic_error("theta_inverse: rebuilt sequence exceeds its weight");
    beta.insert(beta.end(), static_cast<size_t>(zeros), 0);
    return MarkedPair(g.lambda().parts(), SubdiagonalSequence(std::move(beta)));
}

std::vector<GoodPair> enumerate_good_pairs(int n, int bound) {
    check_weight_bound(n, bound, "enumerate_good_pairs");
    std::vector<GoodPair> result;
    for (int a = 0; a <= n; ++a) {
        std::vector<Partition> lambdas;
        for (Partition& p : enumerate_partitions(a, bound))
            if (p.has_distinct_parts())
                lambdas.push_back(std::move(p));
        if (lambdas.empty())
            continue;
        for (const Composition& mu : enumerate_compositions(n - a, bound))
            for (const Partition& lambda : lambdas)
                if (is_good_pair(lambda, mu))
                    result.emplace_back(lambda, mu);
    }
    std::sort(result.begin(), result.end());
    return result;
}

GoodPairClass class_ladder(const Composition& mu) {
    if (!is_good_pair(Partition(), mu))
        throw std::invalid_argument("class_ladder: (empty, mu) is not a good pair");
    const auto& parts = mu.parts();
    std::vector<char> valid(parts.size() + 1, 0);
    valid[0] = 1;
    for (size_t k = 1; k <= parts.size(); ++k) {
        if (k >= 2 && parts[k - 2] >= parts[k - 1])
            break; // prefix no longer strictly increasing; nor is any longer one
        const Partition lambda(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(k)));
        const Composition rest(std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(k), parts.end()));
        valid[k] = is_good_pair(lambda, rest);
    }
    // validity is downward closed; the scan confirms it
    GoodPairClass cls;
    for (size_t k = 0; k <= parts.size(); ++k) {
        if (!valid[k]) {
            for (size_t j = k; j <= parts.size(); ++j)
                if (valid[j])
                    throw std::logic_error("class_ladder: validity is not downward closed");
            break;
        }
        cls.ell = static_cast<int>(k);
        cls.members.emplace_back(
            Partition(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(k))),
            Composition(std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(k), parts.end())));
    }
    return cls;
}

Factorization factor_few_inversions(const Permutation& p, int i) {
    if (i < 0)
        throw std::invalid_argument("factor_few_inversions: negative index");
    const int n = p.size();
    if (inversions(p) != static_cast<std::int64_t>(n) - i - 1)
        throw std::invalid_argument("factor_few_inversions: permutation must have |p|-i-1 inversions");
    const auto& a = p.values();
    // longest prefix whose inversion count is its length minus i
    int split = -1;
    std::int64_t prefix_inversions = 0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            for (int j = 0; j < k - 1; ++j)
                if (a[static_cast<size_t>(j)] > a[static_cast<size_t>(k) - 1])
                    ++prefix_inversions;
        if (prefix_inversions == static_cast<std::int64_t>(k) - i)
            split = k;
    }
    if (split < 0)
        throw std::logic_error("factor_few_inversions: no prefix with the required inversion count");
    std::vector<int> sigma(a.begin(), a.begin() + split);
    for (int v : sigma)
        if (v > split)
            throw std::logic_error("factor_few_inversions: prefix is not a permutation of an initial segment");
    std::vector<int> tau(a.begin() + split, a.end());
    for (int& v : tau)
        v -= split;
    Factorization f{Permutation(std::move(sigma)), Permutation(std::move(tau))};
    if (!in_catalan_set(f.tau))
        throw std::logic_error("factor_few_inversions: suffix falls outside the Catalan set");
    return f;
}

bool is_m_block(const Composition& m) {
    const auto& p = m.parts();
    if (p.size() < 2 || p[0] >= p[1])
        return false;
    for (size_t j = 2; j < p.size(); ++j)
        if (p[j - 1] < p[j])
            return false;
    return true;
}

std::vector<Composition> m_block_factorization(const Composition& mu) {
    if (lir(mu) % 2 != 0)
        throw std::invalid_argument("m_block_factorization: lir(mu) must be even");
    const auto& w = mu.parts();
    const size_t len = w.size();
    // factorable[s]: the suffix starting at s splits into blocks
    std::vector<char> factorable(len + 1, 0);
    factorable[len] = 1;
    for (size_t s = len; s-- > 0;) {
        if (s + 1 >= len || w[s] >= w[s + 1])
            continue;
        // valid block ends: s+1 up to the end of the weakly decreasing run
        for (size_t e = s + 1; e < len; ++e) {
            if (e > s + 1 && w[e - 1] < w[e])
                break;
            if (factorable[e + 1]) {
                factorable[s] = 1;
                break;
            }
        }
    }
    if (!factorable[0])
        throw std::logic_error("m_block_factorization: composition with even lir must factor");
    std::vector<Composition> blocks;
    size_t s = 0;
    while (s < len) {
        size_t chosen = 0;
        int candidates = 0;
        for (size_t e = s + 1; e < len; ++e) {
            if (e > s + 1 && w[e - 1] < w[e])
                break;
            if (factorable[e + 1]) {
                chosen = e;
                ++candidates;
            }
        }
        if (candidates != 1)
            throw std::logic_error("m_block_factorization: factorization is not unique");
        Composition block(std::vector<int>(w.begin() + static_cast<std::ptrdiff_t>(s),
                                           w.begin() + static_cast<std::ptrdiff_t>(chosen) + 1));
        if (!is_m_block(block))
            throw std::logic_error("m_block_factorization: produced block has the wrong shape");
        blocks.push_back(std::move(block));
        s = chosen + 1;
    }
    return blocks;
}

} // namespace fewinv
