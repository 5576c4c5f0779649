#include <doctest.h>

#include <algorithm>

#include "fewinv/enumerate.hpp"
#include "fewinv/mahonian.hpp"
#include "fewinv/notation.hpp"

using namespace fewinv;

TEST_CASE("permutations with a given inversion count") {
    CHECK(enumerate_with_inversions(4, 3).size() == 6);
    CHECK(enumerate_with_inversions(3, 0) ==
          std::vector<Permutation>{Permutation::identity(3)});
    CHECK(enumerate_with_inversions(6, 6).size() == 90);
    CHECK(enumerate_with_inversions(0, 0).size() == 1);
    CHECK(enumerate_with_inversions(0, 1).empty());
    CHECK_THROWS_AS(enumerate_with_inversions(10, 3), std::invalid_argument);
}

TEST_CASE("the catalan set") {
    CHECK(enumerate_catalan_set(3) ==
          std::vector<Permutation>{parse_permutation("231"), parse_permutation("312")});
    CHECK(enumerate_catalan_set(4) ==
          std::vector<Permutation>{parse_permutation("1432"), parse_permutation("2341"),
                                   parse_permutation("2413"), parse_permutation("3142"),
                                   parse_permutation("4123")});
    CHECK(enumerate_catalan_set(1) == std::vector<Permutation>{Permutation::identity(1)});
    CHECK(enumerate_catalan_set(2) == std::vector<Permutation>{parse_permutation("21")});
    CHECK(enumerate_catalan_set(0).empty());
    for (int n = 1; n <= 7; ++n)
        CHECK(Int(enumerate_catalan_set(n).size()) == catalan_number(n - 1));
    CHECK_THROWS_AS(enumerate_catalan_set(10), std::invalid_argument);
}

TEST_CASE("catalan membership needs the full inversion count") {
    CHECK(in_catalan_set(parse_permutation("231")));
    CHECK_FALSE(in_catalan_set(parse_permutation("213"))); // one inversion, needs two
    CHECK_FALSE(in_catalan_set(parse_permutation("321"))); // prefix 32 already has one
    CHECK_FALSE(in_catalan_set(Permutation()));
}

TEST_CASE("partitions and compositions") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_compositions(3) ==
          std::vector<Composition>{parse_composition("111"), parse_composition("12"),
                                   parse_composition("21"), parse_composition("3")});
    CHECK(enumerate_compositions(5).size() == 16);
    CHECK(enumerate_compositions(0) == std::vector<Composition>{Composition()});
    CHECK_THROWS_AS(enumerate_partitions(15), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_compositions(15), std::invalid_argument);

    // explicit bound raises the guard
    CHECK(enumerate_compositions(15, 15).size() == 16384);
}

TEST_CASE("subdiagonal sequences with a fixed sum") {
    const auto once = enumerate_subdiagonal_with_sum(3, 3);
    REQUIRE(once.size() == 1);
    CHECK(once.front() == parse_subdiagonal("012"));
    CHECK(enumerate_subdiagonal_with_sum(0, 0).size() == 1);
    CHECK(enumerate_subdiagonal_with_sum(1, 1).empty());
    CHECK(enumerate_subdiagonal_with_sum(2, 2).empty());

    // length-4 sum-4 sequences back the weight-4 marked pairs
    const auto four = enumerate_subdiagonal_with_sum(4, 4);
    CHECK(four.size() == 5);
    for (const auto& b : four)
        CHECK(b.sum() == 4);

    // sums partition by count: total over all sums equals prod k
    std::size_t total = 0;
    for (std::int64_t s = 0; s <= 6; ++s)
        total += enumerate_subdiagonal_with_sum(4, s).size();
    CHECK(total == 24);
}

TEST_CASE("weakly increasing subdiagonal sequences are counted by catalan numbers") {
    for (int n = 0; n <= 9; ++n)
        CHECK(count_weakly_increasing_subdiagonal(n) == catalan_number(n));
}
