#include <doctest.h>

#include "fewinv/json_io.hpp"
#include "fewinv/notation.hpp"

using namespace fewinv;

TEST_CASE("compact parse and format round trips") {
    CHECK(format_permutation(parse_permutation("4213675")) == "4213675");
    CHECK(format_composition(parse_composition("643452")) == "643452");
    CHECK(format_composition(Composition()) == "");
    CHECK(format_partition(parse_partition("6211")) == "6211");
    CHECK(format_subdiagonal(parse_subdiagonal("0102021")) == "0102021");
    CHECK(format_signed_tuple(parse_signed_tuple("11,62;643452")) == "11,62;643452");
    CHECK(format_signed_tuple(parse_signed_tuple(";3644")) == ";3644");
    CHECK(format_marked_pair(parse_marked_pair("1,3;0103")) == "1,3;0103");
    CHECK(format_marked_pair(parse_marked_pair(";012")) == ";012");
    CHECK(format_good_pair(parse_good_pair("13;152")) == "13;152");
    CHECK(format_good_pair(parse_good_pair(";121")) == ";121");
}

TEST_CASE("compact notation rejects malformed text") {
    CHECK_THROWS_AS(parse_permutation("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("122"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("102"), std::invalid_argument); // 0 part
    CHECK_THROWS_AS(parse_partition("121"), std::invalid_argument);   // not decreasing
    CHECK_THROWS_AS(parse_signed_tuple("11,62"), std::invalid_argument);
    CHECK_THROWS_AS(parse_marked_pair("0103"), std::invalid_argument);
    CHECK_THROWS_AS(parse_marked_pair("1,;012"), std::invalid_argument);
    CHECK_THROWS_AS(parse_good_pair("31;152"), std::invalid_argument); // not increasing
}

TEST_CASE("compact formatting refuses multi-digit values") {
    CHECK_THROWS_AS(format_composition(Composition({12, 1})), std::domain_error);
    CHECK_THROWS_AS(format_partition(Partition({10})), std::domain_error);
    // marks above 9 are fine, they are printed as plain integers
    std::vector<int> beta(12, 1);
    beta[0] = 0;
    beta[11] = 2; // entry sum 12 matches the length
    CHECK(format_marked_pair(MarkedPair({11}, SubdiagonalSequence(beta))) == "11;011111111112");
}

TEST_CASE("json schemas round trip") {
    const SignedTuple t = parse_signed_tuple("11,62;643452");
    const auto jt = signed_tuple_to_json(t);
    CHECK(jt.at("partitions").at(1).at(0) == 6); // decreasing listing
    CHECK(signed_tuple_from_json(jt) == t);

    const MarkedPair p = parse_marked_pair("1,3;0020152000");
    const auto jp = marked_pair_to_json(p);
    CHECK(jp.at("marks").size() == 2);
    CHECK(marked_pair_from_json(jp) == p);

    const GoodPair g = parse_good_pair("13;152");
    const auto jg = good_pair_to_json(g);
    CHECK(jg.at("lambda") == nlohmann::json::array({1, 3}));
    CHECK(good_pair_from_json(jg) == g);

    CHECK_THROWS(marked_pair_from_json(nlohmann::json{{"marks", {1}}}));
}
