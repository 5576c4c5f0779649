#include <doctest.h>

#include "fewinv/bijections.hpp"
#include "fewinv/enumerate.hpp"
#include "fewinv/mahonian.hpp"
#include "fewinv/notation.hpp"

using namespace fewinv;

TEST_CASE("table rows match the triangle") {
    MahonianTable table(9);
    CHECK(table.row(4) == std::vector<Int>{1, 3, 5, 6, 5, 3, 1});
    CHECK(table.entry(6, 6) == 90);
    CHECK(table.row(0) == std::vector<Int>{1});
    CHECK(table.entry(3, 7) == 0);
    CHECK(table.entry(3, -1) == 0);
    CHECK_THROWS_AS(table.row(10), std::out_of_range);
}

TEST_CASE("table rows match brute-force counts") {
    MahonianTable table(6);
    for (int n = 0; n <= 6; ++n)
        for (std::int64_t k = 0; k <= n * (n - 1) / 2; ++k)
            CHECK(table.entry(n, k) == Int(enumerate_with_inversions(n, k).size()));
}

TEST_CASE("closed form for I_n(k)") {
    // the worked instance, term by term
    CHECK(binomial(11, 6) == 462);
    CHECK(binomial(9, 4) == 126);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(6, 1) == 6);
    CHECK(binomial(11, 6) - binomial(9, 4) - binomial(10, 5) + binomial(6, 1) == 90);
    CHECK(knuth_netto(6, 6) == 90);

    CHECK(knuth_netto(0, 0) == 1);
    CHECK(knuth_netto(7, 0) == 1);
    CHECK(knuth_netto(5, 5) == 22);
    CHECK_THROWS_AS(knuth_netto(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(knuth_netto(3, -1), std::invalid_argument);

    MahonianTable table(30);
    for (int n = 0; n <= 30; ++n)
        for (std::int64_t k = 0; k <= n; ++k)
            CHECK(knuth_netto(n, k) == table.entry(n, k));
}

TEST_CASE("catalan numbers and series") {
    CHECK(catalan_series(5).coefficients() == std::vector<Int>{1, 1, 2, 5, 14, 42});
    CHECK(catalan_number(0) == 1);
    for (int n = 0; n <= 20; ++n)
        CHECK(catalan_series(20).coefficient(n) == catalan_number(n));
    CHECK(Int(enumerate_catalan_set(5).size()) == catalan_number(4));
    CHECK(catalan_number(4) == 14);
}

TEST_CASE("subdiagonal series reproduce the displays") {
    CHECK(subdiagonal_series(0, 8).coefficients() ==
          std::vector<Int>{1, 0, 0, 1, 5, 22, 90, 359, 1415});
    CHECK(subdiagonal_series(1, 8).coefficients() ==
          std::vector<Int>{0, 1, 1, 2, 6, 20, 71, 259, 961});
    CHECK(subdiagonal_series(2, 8).coefficients() ==
          std::vector<Int>{0, 0, 1, 2, 5, 15, 49, 169, 602});

    for (int i = 0; i <= 4; ++i) {
        const IntegerSeries dp = subdiagonal_series(i, 20);
        CHECK(dp == subdiagonal_series(i, 20, SubdiagonalMethod::catalan_shift));
        CHECK(dp == subdiagonal_series(i, 20, SubdiagonalMethod::via_r));
        for (int n = 0; n < i; ++n)
            CHECK(dp.coefficient(n) == 0); // the series starts at x^i
    }
}

TEST_CASE("the three constructions of R") {
    const std::vector<Int> display{1, 0, 0, 1, 2, 5, 9, 19, 37, 74};
    CHECK(r_series(9, RConstruction::product).coefficients() == display);
    CHECK(r_series(9, RConstruction::inverse_one_minus_m).coefficients() == display);
    CHECK(r_series(9, RConstruction::divisor_recursion).coefficients() == display);
    const IntegerSeries a = r_series(60, RConstruction::product);
    CHECK(a == r_series(60, RConstruction::inverse_one_minus_m));
    CHECK(a == r_series(60, RConstruction::divisor_recursion));
}

TEST_CASE("M starts like the display and counts its compositions") {
    const IntegerSeries m = m_series(9);
    CHECK(m.coefficients() == std::vector<Int>{0, 0, 0, 1, 2, 5, 8, 15, 23, 37});

    std::vector<Composition> m5;
    for (const Composition& c : enumerate_compositions(5))
        if (is_m_block(c))
            m5.push_back(c);
    CHECK(m5 == std::vector<Composition>{parse_composition("1211"), parse_composition("122"),
                                         parse_composition("131"), parse_composition("14"),
                                         parse_composition("23")});
    const IntegerSeries m10 = m_series(10);
    for (int n = 0; n <= 10; ++n) {
        Int count = 0;
        for (const Composition& c : enumerate_compositions(n))
            if (is_m_block(c))
                ++count;
        CHECK(count == m10.coefficient(n));
    }
}

TEST_CASE("log-derivative and pointed-structure identities") {
    CHECK(log_derivative_check(60));
    CHECK(pointed_structure_check(60));

    // hand expansion at the first nonzero order
    const IntegerSeries m = m_series(3);
    const IntegerSeries lhs =
        mul(pointing(m), inverse(sub(IntegerSeries::constant(1, 3), m)));
    CHECK(lhs.coefficient(3) == 3);
    CHECK(lhs.coefficient(1) == 0);
    CHECK(power_of_two(3) - divisor_sum(3) - 1 == 3);

    const IntegerSeries r = r_series(3);
    CHECK(mul(pointing(r), inverse(r)).coefficient(1) == 0);
    CHECK(mul(pointing(r), inverse(r)).coefficient(2) == 0);
}

TEST_CASE("cycle-type average") {
    CHECK(cycle_type_formula(0) == 1);
    CHECK(cycle_type_formula(3) == 1);
    CHECK(cycle_type_formula(8) == 37);
    const IntegerSeries r = r_series(12);
    for (int n = 0; n <= 12; ++n)
        CHECK(cycle_type_formula(n) == r.coefficient(n));
    CHECK_THROWS_AS(cycle_type_formula(31), std::invalid_argument);
}

TEST_CASE("rows are palindromic and sum to n!") {
    MahonianTable table(10);
    for (int n = 0; n <= 10; ++n) {
        const auto& row = table.row(n);
        Int sum = 0;
        for (size_t k = 0; k < row.size(); ++k) {
            CHECK(row[k] == row[row.size() - 1 - k]);
            sum += row[k];
        }
        CHECK(sum == factorial(n));
    }
}
