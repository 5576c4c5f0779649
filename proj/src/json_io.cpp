#include "fewinv/json_io.hpp"

#include <stdexcept>

namespace fewinv {

namespace {

using nlohmann::json;

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + ": expected an array of integers");
    std::vector<int> values;
    values.reserve(j.size());
    for (const auto& item : j)
        values.push_back(item.get<int>());
    return values;
}

} // namespace

nlohmann::json series_to_json(const IntegerSeries& s) {
    json coefficients = json::array();
    for (const Int& c : s.coefficients())
        coefficients.push_back(c.str());
    return json{{"order", s.order()}, {"coefficients", std::move(coefficients)}};
}

IntegerSeries series_from_json(const nlohmann::json& j) {
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coefficients");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
        throw std::invalid_argument("series: coefficients must hold order+1 decimal strings");
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (const auto& item : coeffs)
        c.emplace_back(item.get<std::string>());
    return IntegerSeries::from_coefficients(std::move(c));
}

nlohmann::json signed_tuple_to_json(const SignedTuple& t) {
    json partitions = json::array();
    for (const Partition& p : t.partitions())
        partitions.push_back(p.decreasing_parts());
    return json{{"partitions", std::move(partitions)}, {"tail", t.tail().parts()}};
}

SignedTuple signed_tuple_from_json(const nlohmann::json& j) {
    std::vector<Partition> partitions;
    for (const auto& parts : j.at("partitions"))
        partitions.emplace_back(int_list(parts, "signed tuple partition"));
    return SignedTuple(std::move(partitions),
                       Composition(int_list(j.at("tail"), "signed tuple tail")));
}

nlohmann::json marked_pair_to_json(const MarkedPair& p) {
    return json{{"marks", p.marks()}, {"beta", p.beta().entries()}};
}

MarkedPair marked_pair_from_json(const nlohmann::json& j) {
    return MarkedPair(int_list(j.at("marks"), "marked pair marks"),
                      SubdiagonalSequence(int_list(j.at("beta"), "marked pair beta")));
}

nlohmann::json good_pair_to_json(const GoodPair& g) {
    return json{{"lambda", g.lambda().parts()}, {"mu", g.mu().parts()}};
}

GoodPair good_pair_from_json(const nlohmann::json& j) {
    return GoodPair(Partition(int_list(j.at("lambda"), "good pair lambda")),
                    Composition(int_list(j.at("mu"), "good pair mu")));
}

} // namespace fewinv
