#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fewinv/bijections.hpp"
#include "fewinv/enumerate.hpp"
#include "fewinv/mahonian.hpp"
#include "fewinv/notation.hpp"

using namespace fewinv;

TEST_CASE("signed tuple construction") {
    CHECK_THROWS_AS(SignedTuple({Partition()}, Composition()), std::invalid_argument);
    const SignedTuple t = parse_signed_tuple("11,62;643452");
    CHECK(t.weight() == 2 + 8 + 24);
    CHECK(t.sign() == 1);
    CHECK(parse_signed_tuple("6211;").sign() == -1);
    CHECK(parse_signed_tuple(";").weight() == 0);
}

TEST_CASE("the weight-3 signed tuples split 9 positive, 8 negative") {
    const auto tuples = enumerate_signed_tuples(3);
    CHECK(tuples.size() == 17);
    int positive = 0, negative = 0;
    for (const SignedTuple& t : tuples)
        (t.sign() > 0 ? positive : negative) += 1;
    CHECK(positive == 9);
    CHECK(negative == 8);

    const auto empty_weight = enumerate_signed_tuples(0);
    REQUIRE(empty_weight.size() == 1);
    CHECK(empty_weight.front().sign() == 1);
    CHECK(empty_weight.front().partitions().empty());

    const IntegerSeries r = r_series(8);
    for (int n = 0; n <= 8; ++n) {
        Int sum = 0;
        for (const SignedTuple& t : enumerate_signed_tuples(n))
            sum += t.sign();
        CHECK(sum == r.coefficient(n));
    }
    CHECK_THROWS_AS(enumerate_signed_tuples(13), std::invalid_argument);
}

TEST_CASE("phi on the worked examples") {
    CHECK(phi(parse_signed_tuple("6211;")) == parse_signed_tuple(";6211"));
    CHECK(phi(parse_signed_tuple("11,62;243352")) == parse_signed_tuple("11;62243352"));
    CHECK(phi(parse_signed_tuple("11,62;643452")) == parse_signed_tuple("11,62,643;452"));
    CHECK(phi(parse_signed_tuple("11,62;643425")) == parse_signed_tuple("11,62,64;3425"));
    CHECK(phi(parse_signed_tuple(";3644")) == parse_signed_tuple(";3644")); // lir = 2, fixed
}

TEST_CASE("phi is a sign-reversing involution with even-lir fixed points") {
    for (int n = 0; n <= 7; ++n) {
        int fixed = 0;
        for (const SignedTuple& t : enumerate_signed_tuples(n)) {
            const SignedTuple image = phi(t);
            CHECK(image.weight() == t.weight());
            CHECK(phi(image) == t);
            if (image == t) {
                ++fixed;
                CHECK(t.partitions().empty());
                CHECK(lir(t.tail()) % 2 == 0);
            } else {
                CHECK(image.sign() == -t.sign());
            }
        }
        CHECK(fixed == static_cast<int>(phi_fixed_points(n).size()));
    }
}

TEST_CASE("phi handles parts beyond the compact-digit range") {
    const SignedTuple t({Partition({11, 10})}, Composition({12, 13}));
    const SignedTuple image = phi(t); // lir(12,13) = 2 is even, so the partition moves over
    CHECK(image == SignedTuple({}, Composition({11, 10, 12, 13})));
    CHECK(phi(image) == t);
}

TEST_CASE("phi fixed points for small weights") {
    const auto f3 = phi_fixed_points(3);
    REQUIRE(f3.size() == 1);
    CHECK(f3.front() == parse_composition("12"));
    const auto f0 = phi_fixed_points(0);
    REQUIRE(f0.size() == 1);
    CHECK(f0.front().empty());
}

TEST_CASE("marked pair sets for small weights") {
    const auto t0 = enumerate_marked_pairs(0);
    REQUIRE(t0.size() == 1);
    CHECK(t0.front().weight() == 0);
    CHECK(enumerate_marked_pairs(1).empty());
    CHECK(enumerate_marked_pairs(2).empty());

    const auto t3 = enumerate_marked_pairs(3);
    REQUIRE(t3.size() == 1);
    CHECK(t3.front() == parse_marked_pair(";012"));

    const auto t4 = enumerate_marked_pairs(4);
    CHECK(t4.size() == 8);
    const std::set<MarkedPair> expected{
        parse_marked_pair(";0121"), parse_marked_pair(";0112"), parse_marked_pair(";0103"),
        parse_marked_pair(";0022"), parse_marked_pair(";0013"), parse_marked_pair("1;012"),
        parse_marked_pair("2;012"),  parse_marked_pair("3;012")};
    CHECK(std::set<MarkedPair>(t4.begin(), t4.end()) == expected);

    // |T_{n,k}| = I_{n-k}(n-k) * binom(n-k, k)
    MahonianTable table(8);
    for (int n = 0; n <= 8; ++n) {
        std::map<size_t, Int> by_k;
        for (const MarkedPair& p : enumerate_marked_pairs(n))
            ++by_k[p.marks().size()];
        for (int k = 0; k <= n; ++k) {
            const Int expected_count = table.entry(n - k, n - k) * binomial(n - k, k);
            CHECK(by_k[static_cast<size_t>(k)] == expected_count);
        }
    }
}

TEST_CASE("marked pair validation") {
    CHECK_THROWS_AS(MarkedPair({1, 1}, parse_subdiagonal("012")), std::invalid_argument);
    CHECK_THROWS_AS(MarkedPair({4}, parse_subdiagonal("012")), std::invalid_argument);
    CHECK_THROWS_AS(MarkedPair({}, parse_subdiagonal("011")), std::invalid_argument); // sum 2 != 3
    CHECK(MarkedPair({3, 1}, parse_subdiagonal("012")).marks() == std::vector<int>{1, 3});
}

TEST_CASE("psi on the worked examples") {
    CHECK(psi(parse_marked_pair("1,3;0103")) == parse_marked_pair("1;01013"));        // case 1
    CHECK(psi(parse_marked_pair("2,3;0010150")) == parse_marked_pair("2;00201500"));  // case 2
    CHECK(psi(parse_marked_pair("1;002040")) == parse_marked_pair("1,4;00230"));      // case 3
    CHECK(psi(parse_marked_pair("3;0120250000")) == parse_marked_pair("2,3;002025000")); // case 4
    const MarkedPair fixed = parse_marked_pair("1,3;0020152000");
    CHECK(psi(fixed) == fixed);
}

TEST_CASE("psi is a sign-reversing involution") {
    for (int n = 0; n <= 7; ++n)
        for (const MarkedPair& p : enumerate_marked_pairs(n)) {
            const MarkedPair image = psi(p);
            CHECK(image.weight() == p.weight());
            CHECK(psi(image) == p);
            if (image != p)
                CHECK(image.sign() == -p.sign());
        }
}

TEST_CASE("theta on the worked examples") {
    CHECK(theta(parse_marked_pair(";0121")) == parse_good_pair(";121"));
    CHECK(theta(parse_marked_pair("1,3;0020152000")) == parse_good_pair("13;152"));
    CHECK(theta_inverse(parse_good_pair("13;152")) == parse_marked_pair("1,3;0020152000"));
    CHECK(theta(parse_marked_pair(";")) == GoodPair());
    CHECK_THROWS_AS(theta(parse_marked_pair("1,3;0103")), std::invalid_argument);
}

TEST_CASE("theta is a sign-preserving bijection onto the good pairs") {
    for (int n = 0; n <= 8; ++n) {
        std::vector<GoodPair> image;
        for (const MarkedPair& p : enumerate_marked_pairs(n)) {
            if (psi(p) != p)
                continue;
            const GoodPair g = theta(p);
            CHECK(g.weight() == p.weight());
            CHECK(g.sign() == p.sign());
            CHECK(theta_inverse(g) == p);
            image.push_back(g);
        }
        std::sort(image.begin(), image.end());
        CHECK(image == enumerate_good_pairs(n));
    }
}

TEST_CASE("good pairs for small weights") {
    CHECK(enumerate_good_pairs(1).empty());
    CHECK(enumerate_good_pairs(2).empty());
    const auto g3 = enumerate_good_pairs(3);
    REQUIRE(g3.size() == 1);
    CHECK(g3.front() == parse_good_pair(";12"));

    CHECK(enumerate_good_pairs(4) ==
          std::vector<GoodPair>{parse_good_pair(";121"), parse_good_pair(";13")});
    CHECK(enumerate_good_pairs(5) ==
          std::vector<GoodPair>{parse_good_pair(";113"), parse_good_pair(";1211"),
                                parse_good_pair(";122"), parse_good_pair(";131"),
                                parse_good_pair(";14"), parse_good_pair(";23"),
                                parse_good_pair("1;13")});
    CHECK_THROWS_AS(GoodPair(parse_partition("3"), parse_composition("3241261")),
                    std::invalid_argument);
}

TEST_CASE("class ladders") {
    const GoodPairClass c113 = class_ladder(parse_composition("113"));
    CHECK(c113.ell == 1);
    CHECK(c113.members ==
          std::vector<GoodPair>{parse_good_pair(";113"), parse_good_pair("1;13")});

    const GoodPairClass c1131 = class_ladder(parse_composition("1131"));
    CHECK(c1131.ell == 1);
    CHECK(c1131.members ==
          std::vector<GoodPair>{parse_good_pair(";1131"), parse_good_pair("1;131")});

    const GoodPairClass c121 = class_ladder(parse_composition("121"));
    CHECK(c121.ell == 0);
    CHECK(c121.members.size() == 1);

    CHECK_THROWS_AS(class_ladder(parse_composition("3241261")), std::invalid_argument);

    // the three non-singleton classes of weight 6
    std::vector<Composition> non_singleton;
    for (const Composition& m : enumerate_compositions(6))
        if (is_good_pair(Partition(), m) && class_ladder(m).members.size() > 1)
            non_singleton.push_back(m);
    CHECK(non_singleton == std::vector<Composition>{parse_composition("1131"),
                                                    parse_composition("114"),
                                                    parse_composition("123")});
}

TEST_CASE("factoring permutations with few inversions") {
    const Factorization f = factor_few_inversions(parse_permutation("4213675"), 0);
    CHECK(f.sigma == parse_permutation("4213"));
    CHECK(f.tau == parse_permutation("231"));
    CHECK(in_catalan_set(f.tau));
    CHECK(direct_sum(f.sigma, f.tau) == parse_permutation("4213675"));

    for (int n = 1; n <= 6; ++n)
        for (const Permutation& p : enumerate_catalan_set(n)) {
            const Factorization g = factor_few_inversions(p, 0);
            CHECK(g.sigma.empty());
            CHECK(g.tau == p);
        }

    CHECK_THROWS_AS(factor_few_inversions(parse_permutation("321"), 0), std::invalid_argument);
    CHECK_THROWS_AS(factor_few_inversions(Permutation(), 0), std::invalid_argument);

    // recombination reproduces the permutation exactly
    for (int i = 0; i <= 2; ++i)
        for (int n = i + 1; n <= 7; ++n)
            for (const Permutation& p : enumerate_with_inversions(n, n - i - 1)) {
                const Factorization h = factor_few_inversions(p, i);
                CHECK(direct_sum(h.sigma, h.tau) == p);
                CHECK(inversions(h.sigma) == h.sigma.size() - i);
                CHECK(in_catalan_set(h.tau));
            }
}

TEST_CASE("m-block shape predicate") {
    CHECK(is_m_block(parse_composition("12")));
    CHECK(is_m_block(parse_composition("1211")));
    CHECK(is_m_block(parse_composition("3511")));
    CHECK_FALSE(is_m_block(parse_composition("1")));
    CHECK_FALSE(is_m_block(parse_composition("21")));
    CHECK_FALSE(is_m_block(parse_composition("11")));
    CHECK_FALSE(is_m_block(parse_composition("123")));
    CHECK_FALSE(is_m_block(Composition()));
}

TEST_CASE("m-block factorization") {
    const auto blocks = m_block_factorization(parse_composition("123511211"));
    CHECK(blocks == std::vector<Composition>{parse_composition("12"), parse_composition("351"),
                                             parse_composition("1211")});
    CHECK(m_block_factorization(Composition()).empty());
    CHECK(m_block_factorization(parse_composition("1212")) ==
          std::vector<Composition>{parse_composition("12"), parse_composition("12")});
    CHECK(m_block_factorization(parse_composition("1234")) ==
          std::vector<Composition>{parse_composition("12"), parse_composition("34")});
    CHECK_THROWS_AS(m_block_factorization(parse_composition("213")), std::invalid_argument);

    // every even-lir composition factors, blocks are m-blocks, concatenation restores
    for (int n = 0; n <= 9; ++n)
        for (const Composition& mu : phi_fixed_points(n)) {
            const auto bs = m_block_factorization(mu);
            std::vector<int> joined;
            for (const Composition& b : bs) {
                CHECK(is_m_block(b));
                joined.insert(joined.end(), b.parts().begin(), b.parts().end());
            }
            CHECK(joined == mu.parts());
        }
}
