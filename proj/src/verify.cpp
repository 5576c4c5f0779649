#include "fewinv/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "fewinv/bijections.hpp"
#include "fewinv/enumerate.hpp"
#include "fewinv/mahonian.hpp"
#include "fewinv/series.hpp"

namespace fewinv {

void VerificationReport::add(std::string name, std::string parameters, bool passed,
                             std::string witness) {
    checks.push_back({std::move(name), std::move(parameters), passed, std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

int VerificationReport::passed_count() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

int VerificationReport::failed_count() const {
    return static_cast<int>(checks.size()) - passed_count();
}

namespace {

std::string ints(const std::vector<int>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

std::string tuple_str(const SignedTuple& t) {
    std::string out = "(";
    for (size_t i = 0; i < t.partitions().size(); ++i) {
        if (i > 0)
            out += ",";
        out += ints(t.partitions()[i].decreasing_parts());
    }
    out += ";" + ints(t.tail().parts()) + ")";
    return out;
}

std::string pair_str(const MarkedPair& p) {
    return "(" + ints(p.marks()) + ";" + ints(p.beta().entries()) + ")";
}

IntegerSeries x_times_catalan(int order) {
    return mul(IntegerSeries::identity(order), catalan_series(order));
}

int first_mismatch(const IntegerSeries& a, const IntegerSeries& b) {
    const int order = std::min(a.order(), b.order());
    for (int n = 0; n <= order; ++n)
        if (a.coefficient(n) != b.coefficient(n))
            return n;
    return -1;
}

/// All permutations of [n] bucketed by inversion count.
std::map<std::int64_t, std::vector<Permutation>> bucket_by_inversions(int n) {
    std::map<std::int64_t, std::vector<Permutation>> buckets;
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        Permutation p(v);
        buckets[inversions(p)].push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return buckets;
}

/// Number of ways to split w[s..] into M-blocks, by exhaustive search.
long long count_block_factorizations(const std::vector<int>& w, size_t s) {
    if (s == w.size())
        return 1;
    long long total = 0;
    for (size_t e = s + 1; e < w.size(); ++e) {
        Composition block(std::vector<int>(w.begin() + static_cast<std::ptrdiff_t>(s),
                                           w.begin() + static_cast<std::ptrdiff_t>(e) + 1));
        if (is_m_block(block))
            total += count_block_factorizations(w, e + 1);
    }
    return total;
}

} // namespace

VerificationReport verify_series_identities(const VerifyOptions& options) {
    VerificationReport report;
    const int ord = options.series_order;
    const std::string ord_str = "order=" + std::to_string(ord);

    std::vector<IntegerSeries> s;
    for (int i = 0; i <= 6; ++i)
        s.push_back(subdiagonal_series(i, ord));
    const IntegerSeries xc = x_times_catalan(ord);

    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i <= 5 && ok; ++i) {
            const int bad = first_mismatch(s[static_cast<size_t>(i) + 1], mul(xc, s[static_cast<size_t>(i)]));
            if (bad >= 0) {
                ok = false;
                witness = "i=" + std::to_string(i) + " coefficient " + std::to_string(bad);
            }
        }
        report.add("S[i+1] == xC * S[i]", "i<=5, " + ord_str, ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i <= 5 && ok; ++i) {
            const IntegerSeries shift = subdiagonal_series(i, ord, SubdiagonalMethod::catalan_shift);
            const IntegerSeries via_r = subdiagonal_series(i, ord, SubdiagonalMethod::via_r);
            int bad = first_mismatch(s[static_cast<size_t>(i)], shift);
            if (bad < 0)
                bad = first_mismatch(s[static_cast<size_t>(i)], via_r);
            if (bad >= 0) {
                ok = false;
                witness = "i=" + std::to_string(i) + " coefficient " + std::to_string(bad);
            }
        }
        report.add("S[i] construction methods agree", "i<=5, " + ord_str, ok, witness);
    }

    const IntegerSeries r = r_series(ord);
    {
        const IntegerSeries x_minus_x2 =
            sub(IntegerSeries::identity(ord), IntegerSeries::monomial(1, 2, ord));
        const int bad = first_mismatch(compose(s[0], x_minus_x2), r);
        report.add("S0(x - x^2) == R", ord_str, bad < 0,
                   bad < 0 ? "" : "coefficient " + std::to_string(bad));
    }
    {
        const int bad = first_mismatch(compose(r, xc), s[0]);
        report.add("R(xC) == S0", ord_str, bad < 0,
                   bad < 0 ? "" : "coefficient " + std::to_string(bad));
    }
    {
        const int big = options.r_agreement_order;
        const IntegerSeries a = r_series(big, RConstruction::product);
        const IntegerSeries b = r_series(big, RConstruction::inverse_one_minus_m);
        const IntegerSeries c = r_series(big, RConstruction::divisor_recursion);
        int bad = first_mismatch(a, b);
        if (bad < 0)
            bad = first_mismatch(a, c);
        report.add("R constructions agree (product, 1/(1-M), divisor recursion)",
                   "order=" + std::to_string(big), bad < 0,
                   bad < 0 ? "" : "coefficient " + std::to_string(bad));
    }
    {
        const std::vector<Int> expected{1, 0, 0, 1, 2, 5, 9, 19, 37, 74};
        bool ok = true;
        std::string witness;
        for (int n = 0; n < 10; ++n)
            if (r.coefficient(n) != expected[static_cast<size_t>(n)]) {
                ok = false;
                witness = "coefficient " + std::to_string(n);
                break;
            }
        report.add("R coefficients 0..9 are 1,0,0,1,2,5,9,19,37,74", "", ok, witness);
    }
    {
        const int max = options.knuth_netto_max;
        MahonianTable table(max);
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= max && ok; ++n)
            for (std::int64_t k = 0; k <= n; ++k)
                if (knuth_netto(n, k) != table.entry(n, k)) {
                    ok = false;
                    witness = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    break;
                }
        report.add("knuth_netto(n,k) == I_n(k)", "0<=k<=n<=" + std::to_string(max), ok, witness);
    }
    {
        const int max = options.m_coefficient_order;
        const IntegerSeries m = m_series(max);
        const std::vector<Int> p = partition_counts(max);
        bool ok = m.coefficient(0) == 0;
        std::string witness = ok ? "" : "coefficient 0";
        Int prefix = 0; // p(0) + ... + p(n-1)
        for (int n = 1; n <= max && ok; ++n) {
            prefix += p[static_cast<size_t>(n) - 1];
            if (m.coefficient(n) != prefix - p[static_cast<size_t>(n)]) {
                ok = false;
                witness = "coefficient " + std::to_string(n);
            }
        }
        report.add("M coefficients == p(0)+...+p(n-1) - p(n)", "n<=" + std::to_string(max), ok,
                   witness);
    }
    {
        // on failure, shrink the order to find the smallest witness
        auto smallest_failure = [](bool (*check)(int), int order) -> std::string {
            for (int n = 1; n <= order; ++n)
                if (!check(n))
                    return "n=" + std::to_string(n);
            return "";
        };
        const int ord = options.divisor_identity_order;
        bool ok = log_derivative_check(ord);
        report.add("[x^n] xR'/R == 2^n - sigma(n) - 1 (sigma also via Lambert series)",
                   "n<=" + std::to_string(ord), ok,
                   ok ? "" : smallest_failure(log_derivative_check, ord));
        ok = pointed_structure_check(ord);
        report.add("[x^n] xM'/(1-M) == 2^n - sigma(n) - 1", "n<=" + std::to_string(ord), ok,
                   ok ? "" : smallest_failure(pointed_structure_check, ord));
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= options.cycle_type_max; ++n)
            if (cycle_type_formula(n) != r.coefficient(n)) {
                ok = false;
                witness = "n=" + std::to_string(n);
                break;
            }
        report.add("cycle-type average == [x^n] R", "n<=" + std::to_string(options.cycle_type_max),
                   ok, witness);
    }
    {
        MahonianTable table(options.row_check_max);
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= options.row_check_max && ok; ++n) {
            const auto& row = table.row(n);
            Int total = 0;
            for (size_t k = 0; k < row.size(); ++k) {
                total += row[k];
                if (row[k] != row[row.size() - 1 - k]) {
                    ok = false;
                    witness = "row " + std::to_string(n) + " not palindromic at k=" + std::to_string(k);
                    break;
                }
            }
            if (ok && total != factorial(n)) {
                ok = false;
                witness = "row " + std::to_string(n) + " sum";
            }
        }
        report.add("table rows palindromic and summing to n!",
                   "n<=" + std::to_string(options.row_check_max), ok, witness);
    }
    return report;
}

VerificationReport verify_involutions(const VerifyOptions& options) {
    VerificationReport report;
    const int max = options.involution_max;
    const std::string bound_str = "n<=" + std::to_string(max);
    const IntegerSeries r = r_series(std::max(max, 1));

    bool phi_ok = true, phi_fix_ok = true;
    bool psi_ok = true;
    bool theta_ok = true, dmax_ok = true;
    bool classes_ok = true;
    bool chain_ok = true;
    std::string phi_witness, phi_fix_witness, psi_witness, theta_witness, dmax_witness,
        classes_witness, chain_witness;

    for (int n = 0; n <= max; ++n) {
        const auto tuples = enumerate_signed_tuples(n, std::max(n, kSignedTupleBound));
        Int tuple_sum = 0;
        std::set<Composition> phi_fixed;
        for (const SignedTuple& t : tuples) {
            tuple_sum += t.sign();
            const SignedTuple image = phi(t);
            if (image.weight() != t.weight() || phi(image) != t) {
                phi_ok = false;
                phi_witness = "n=" + std::to_string(n) + " " + tuple_str(t);
                break;
            }
            if (image == t) {
                if (!t.partitions().empty() || lir(t.tail()) % 2 != 0) {
                    phi_fix_ok = false;
                    phi_fix_witness = "n=" + std::to_string(n) + " " + tuple_str(t);
                }
                phi_fixed.insert(t.tail());
            } else if (image.sign() != -t.sign()) {
                phi_ok = false;
                phi_witness = "n=" + std::to_string(n) + " " + tuple_str(t) + " sign";
                break;
            }
        }
        const auto fixed_list = phi_fixed_points(n, std::max(n, kSignedTupleBound));
        if (phi_fix_ok &&
            (phi_fixed.size() != fixed_list.size() ||
             !std::all_of(fixed_list.begin(), fixed_list.end(),
                          [&](const Composition& m) { return phi_fixed.count(m) > 0; }))) {
            phi_fix_ok = false;
            phi_fix_witness = "n=" + std::to_string(n) + " fixed-point set";
        }

        const auto pairs = enumerate_marked_pairs(n, std::max(n, kMarkedPairBound));
        Int pair_sum = 0;
        std::vector<GoodPair> theta_image;
        for (const MarkedPair& p : pairs) {
            pair_sum += p.sign();
            MarkedPair image = psi(p);
            if (image.weight() != p.weight() || psi(image) != p) {
                psi_ok = false;
                psi_witness = "n=" + std::to_string(n) + " " + pair_str(p);
                break;
            }
            if (image != p && image.sign() != -p.sign()) {
                psi_ok = false;
                psi_witness = "n=" + std::to_string(n) + " " + pair_str(p) + " sign";
                break;
            }
            if (image == p) {
                try {
                    const GoodPair g = theta(p);
                    theta_image.push_back(g);
                    if (g.sign() != p.sign() || g.weight() != p.weight() || theta_inverse(g) != p) {
                        theta_ok = false;
                        theta_witness = "n=" + std::to_string(n) + " " + pair_str(p);
                    }
                    if (!p.beta().empty()) {
                        // the rebuilt prefix has length dmax(mu)
                        const auto& beta = p.beta().entries();
                        int ascent = 0;
                        for (int j = 1; j < static_cast<int>(beta.size()); ++j)
                            if (beta[static_cast<size_t>(j) - 1] == 0 && beta[static_cast<size_t>(j)] > 0)
                                ascent = j;
                        if (dmax(g.mu()) != ascent) {
                            dmax_ok = false;
                            dmax_witness = "n=" + std::to_string(n) + " " + pair_str(p);
                        }
                    }
                } catch (const std::exception&) {
                    theta_ok = false;
                    theta_witness = "n=" + std::to_string(n) + " " + pair_str(p);
                }
            }
        }
        auto good = enumerate_good_pairs(n, std::max(n, kGoodPairBound));
        Int good_sum = 0;
        for (const GoodPair& g : good)
            good_sum += g.sign();
        std::sort(theta_image.begin(), theta_image.end());
        if (theta_ok && theta_image != good) {
            theta_ok = false;
            theta_witness = "n=" + std::to_string(n) + " image set";
        }

        // equivalence classes: ladders cover the good pairs, class sums are 0/1
        std::vector<GoodPair> covered;
        for (const Composition& m : enumerate_compositions(n, std::max(n, kPartitionOracleBound))) {
            if (!is_good_pair(Partition(), m))
                continue;
            try {
                const GoodPairClass cls = class_ladder(m);
                covered.insert(covered.end(), cls.members.begin(), cls.members.end());
                const int class_sum = cls.ell % 2 == 0 ? 1 : 0;
                const bool even_lir = lir(m) % 2 == 0;
                const bool parity = (cls.ell % 2) == (lir(m) % 2);
                const bool ell_value = cls.ell == lir(m) || cls.ell == lir(m) - 2;
                if (class_sum != (even_lir ? 1 : 0) || !parity || !ell_value) {
                    classes_ok = false;
                    classes_witness = "n=" + std::to_string(n) + " mu=" + ints(m.parts());
                }
            } catch (const std::exception&) {
                classes_ok = false;
                classes_witness = "n=" + std::to_string(n) + " mu=" + ints(m.parts());
            }
        }
        std::sort(covered.begin(), covered.end());
        if (classes_ok && covered != good) {
            classes_ok = false;
            classes_witness = "n=" + std::to_string(n) + " class union";
        }

        const Int r_n = r.coefficient(n);
        if (chain_ok && (pair_sum != r_n || good_sum != r_n ||
                         Int(fixed_list.size()) != r_n || tuple_sum != r_n)) {
            chain_ok = false;
            chain_witness = "n=" + std::to_string(n);
        }
    }

    report.add("phi is a sign-reversing involution", bound_str, phi_ok, phi_witness);
    report.add("phi fixed points are (empty; mu) with even lir", bound_str, phi_fix_ok,
               phi_fix_witness);
    report.add("psi is a sign-reversing involution with mutually exclusive cases", bound_str,
               psi_ok, psi_witness);
    report.add("theta maps psi fixed points bijectively onto good pairs, preserving sign",
               bound_str, theta_ok, theta_witness);
    report.add("dmax(mu) equals the rebuilt prefix length", bound_str, dmax_ok, dmax_witness);
    report.add("class ladders cover the good pairs with sums in {0,1}", bound_str, classes_ok,
               classes_witness);
    report.add("signed sums over pairs, good pairs, tuples and fixed-point count all equal [x^n] R",
               bound_str, chain_ok, chain_witness);
    return report;
}

VerificationReport verify_factorization(const VerifyOptions& options) {
    VerificationReport report;
    const int max = options.factorization_max;
    const std::string bound_str = "n<=" + std::to_string(max);

    std::vector<std::map<std::int64_t, std::vector<Permutation>>> buckets;
    std::vector<std::vector<Permutation>> catalan_sets;
    for (int n = 0; n <= max; ++n) {
        buckets.push_back(bucket_by_inversions(n));
        std::vector<Permutation> cs;
        for (const Permutation& p : buckets.back()[n - 1])
            if (in_catalan_set(p))
                cs.push_back(p);
        catalan_sets.push_back(std::move(cs));
    }

    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= max && ok; ++n)
            if (Int(catalan_sets[static_cast<size_t>(n)].size()) != catalan_number(n - 1)) {
                ok = false;
                witness = "n=" + std::to_string(n);
            }
        report.add("|catalan set of [n]| == Catalan(n-1)", bound_str, ok, witness);
    }

    for (int i = 0; i <= 2; ++i) {
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= max && ok; ++n) {
            std::vector<std::pair<Permutation, Permutation>> image;
            for (const Permutation& p : buckets[static_cast<size_t>(n)][n - i - 1]) {
                try {
                    const Factorization f = factor_few_inversions(p, i);
                    if (direct_sum(f.sigma, f.tau) != p) {
                        ok = false;
                        witness = "n=" + std::to_string(n) + " p=" + ints(p.values()) +
                                  " does not recombine";
                        break;
                    }
                    image.emplace_back(f.sigma, f.tau);
                } catch (const std::exception& e) {
                    ok = false;
                    witness = "n=" + std::to_string(n) + " p=" + ints(p.values()) + " " + e.what();
                    break;
                }
            }
            if (!ok)
                break;
            std::vector<std::pair<Permutation, Permutation>> expected;
            for (int k = 0; k <= n; ++k)
                for (const Permutation& sigma : buckets[static_cast<size_t>(k)][k - i])
                    for (const Permutation& tau : catalan_sets[static_cast<size_t>(n - k)])
                        expected.emplace_back(sigma, tau);
            std::sort(image.begin(), image.end());
            std::sort(expected.begin(), expected.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
                ok = false;
                witness = "n=" + std::to_string(n) + " image has duplicates";
            } else if (image != expected) {
                ok = false;
                witness = "n=" + std::to_string(n) + " image differs from the product set";
            }
        }
        report.add("prefix split biject permutations with |p|-" + std::to_string(i + 1) +
                       " inversions onto pairs (few-inversion prefix, catalan suffix)",
                   "i=" + std::to_string(i) + ", " + bound_str, ok, witness);
    }

    {
        const int mmax = options.mblock_max;
        const IntegerSeries m = m_series(std::max(mmax, 1));
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= mmax && ok; ++n) {
            Int one_block = 0;
            for (const Composition& mu : phi_fixed_points(n, std::max(n, kPartitionOracleBound))) {
                std::vector<Composition> blocks;
                try {
                    blocks = m_block_factorization(mu);
                } catch (const std::exception& e) {
                    ok = false;
                    witness = "mu=" + ints(mu.parts()) + " " + e.what();
                    break;
                }
                std::vector<int> joined;
                for (const Composition& b : blocks) {
                    if (!is_m_block(b)) {
                        ok = false;
                        witness = "mu=" + ints(mu.parts()) + " block " + ints(b.parts());
                        break;
                    }
                    joined.insert(joined.end(), b.parts().begin(), b.parts().end());
                }
                if (!ok)
                    break;
                if (joined != mu.parts()) {
                    ok = false;
                    witness = "mu=" + ints(mu.parts()) + " does not recombine";
                    break;
                }
                if (count_block_factorizations(mu.parts(), 0) != 1) {
                    ok = false;
                    witness = "mu=" + ints(mu.parts()) + " factorization not unique";
                    break;
                }
                if (blocks.size() == 1)
                    ++one_block;
            }
            if (ok && n >= 1 && one_block != m.coefficient(n)) {
                ok = false;
                witness = "n=" + std::to_string(n) + " one-block count";
            }
        }
        report.add("even-lir compositions factor uniquely into M-blocks; one-block count is [x^n] M",
                   "n<=" + std::to_string(mmax), ok, witness);
    }
    return report;
}

VerificationReport verify_counts(const VerifyOptions& options) {
    VerificationReport report;
    const int max = options.counts_max;
    const std::string bound_str = "n<=" + std::to_string(max);

    {
        MahonianTable table(max);
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= max && ok; ++n) {
            const std::int64_t top = static_cast<std::int64_t>(n) * (n - 1) / 2;
            for (std::int64_t k = 0; k <= top; ++k) {
                const auto perms = enumerate_with_inversions(n, k, std::max(n, kPermutationOracleBound));
                if (Int(perms.size()) != table.entry(n, k)) {
                    ok = false;
                    witness = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    break;
                }
            }
        }
        report.add("table rows equal brute-force inversion counts", bound_str, ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= max && ok; ++n)
            for (const auto& [k, perms] : bucket_by_inversions(n))
                for (const Permutation& p : perms)
                    if (inversions(p) + component_count(p) < p.size()) {
                        ok = false;
                        witness = "p=" + ints(p.values());
                        break;
                    }
        report.add("inversions + components >= length", bound_str, ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= options.inv_catalan_max && ok; ++n)
            if (count_weakly_increasing_subdiagonal(n) != catalan_number(n)) {
                ok = false;
                witness = "n=" + std::to_string(n);
            }
        report.add("weakly increasing subdiagonal sequences are counted by Catalan numbers",
                   "n<=" + std::to_string(options.inv_catalan_max), ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= max && ok; ++n)
            if (Int(enumerate_catalan_set(n, std::max(n, kPermutationOracleBound)).size()) !=
                catalan_number(n - 1)) {
                ok = false;
                witness = "n=" + std::to_string(n);
            }
        report.add("|catalan set| == Catalan(n-1)", bound_str, ok, witness);
    }
    {
        const IntegerSeries r = r_series(std::max(max, 1));
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= max && ok; ++n) {
            Int tuple_sum = 0;
            for (const SignedTuple& t : enumerate_signed_tuples(n, std::max(n, kSignedTupleBound)))
                tuple_sum += t.sign();
            Int pair_sum = 0;
            for (const MarkedPair& p : enumerate_marked_pairs(n, std::max(n, kMarkedPairBound)))
                pair_sum += p.sign();
            Int good_sum = 0;
            for (const GoodPair& g : enumerate_good_pairs(n, std::max(n, kGoodPairBound)))
                good_sum += g.sign();
            const Int fixed = Int(phi_fixed_points(n, std::max(n, kSignedTupleBound)).size());
            if (tuple_sum != r.coefficient(n) || pair_sum != r.coefficient(n) ||
                good_sum != r.coefficient(n) || fixed != r.coefficient(n)) {
                ok = false;
                witness = "n=" + std::to_string(n);
            }
        }
        report.add("signed sums over tuples, marked pairs and good pairs equal [x^n] R",
                   bound_str, ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        const int pmax = std::min(options.inv_catalan_max, kPartitionOracleBound);
        const std::vector<Int> p = partition_counts(pmax);
        const IntegerSeries par = partition_series(pmax);
        for (int n = 0; n <= pmax && ok; ++n) {
            if (Int(enumerate_partitions(n).size()) != p[static_cast<size_t>(n)] ||
                par.coefficient(n) != p[static_cast<size_t>(n)]) {
                ok = false;
                witness = "n=" + std::to_string(n);
            }
            if (n >= 1 && Int(enumerate_compositions(n).size()) != power_of_two(n - 1)) {
                ok = false;
                witness = "n=" + std::to_string(n) + " compositions";
            }
        }
        report.add("pentagonal recurrence and Par(x) match partition enumeration; 2^{n-1} compositions",
                   "n<=" + std::to_string(pmax), ok, witness);
    }
    {
        const int mmax = options.mblock_max;
        const IntegerSeries m = m_series(std::max(mmax, 1));
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= mmax && ok; ++n) {
            Int count = 0;
            for (const Composition& mu : enumerate_compositions(n, std::max(n, kPartitionOracleBound)))
                if (is_m_block(mu))
                    ++count;
            if (count != m.coefficient(n)) {
                ok = false;
                witness = "n=" + std::to_string(n);
            }
        }
        report.add("ascent-then-weakly-decreasing compositions are counted by M(x)",
                   "n<=" + std::to_string(mmax), ok, witness);
    }
    return report;
}

VerificationReport verify_all(const VerifyOptions& options) {
    VerificationReport report = verify_series_identities(options);
    report.merge(verify_involutions(options));
    report.merge(verify_factorization(options));
    report.merge(verify_counts(options));
    return report;
}

} // namespace fewinv
