#include "fewinv/notation.hpp"

#include <stdexcept>

namespace fewinv {

namespace {

std::vector<int> parse_digits(std::string_view text, const char* what) {
    std::vector<int> values;
    values.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string(what) + ": expected digits, got '" + c + "'");
        values.push_back(c - '0');
    }
    return values;
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> values;
    if (!text.empty() && text.back() == ',')
        throw std::invalid_argument(std::string(what) + ": trailing comma");
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        if (comma == pos)
            throw std::invalid_argument(std::string(what) + ": empty list item");
        int value = 0;
        for (size_t i = pos; i < comma; ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw std::invalid_argument(std::string(what) + ": expected an integer list");
            value = value * 10 + (text[i] - '0');
        }
        values.push_back(value);
        pos = comma + 1;
    }
    return values;
}

char digit(int value, const char* what) {
    if (value < 0 || value > 9)
        throw std::domain_error(std::string(what) + ": value " + std::to_string(value) +
                                " has no compact digit form; use JSON");
    return static_cast<char>('0' + value);
}

std::string format_digits(const std::vector<int>& values, const char* what) {
    std::string out;
    out.reserve(values.size());
    for (int v : values)
        out.push_back(digit(v, what));
    return out;
}

} // namespace

Permutation parse_permutation(std::string_view text) {
    return Permutation(parse_digits(text, "permutation"));
}

Composition parse_composition(std::string_view text) {
    return Composition(parse_digits(text, "composition"));
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts = parse_digits(text, "partition");
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i])
            throw std::invalid_argument("partition: digits must be weakly decreasing");
    return Partition(std::move(parts));
}

SubdiagonalSequence parse_subdiagonal(std::string_view text) {
    return SubdiagonalSequence(parse_digits(text, "subdiagonal sequence"));
}

SignedTuple parse_signed_tuple(std::string_view text) {
    const size_t semi = text.find(';');
    if (semi == std::string_view::npos)
        throw std::invalid_argument("signed tuple: expected 'partitions;composition'");
    std::vector<Partition> partitions;
    std::string_view left = text.substr(0, semi);
    size_t pos = 0;
    while (pos < left.size()) {
        size_t comma = left.find(',', pos);
        if (comma == std::string_view::npos)
            comma = left.size();
        partitions.push_back(parse_partition(left.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return SignedTuple(std::move(partitions), parse_composition(text.substr(semi + 1)));
}

MarkedPair parse_marked_pair(std::string_view text) {
    const size_t semi = text.find(';');
    if (semi == std::string_view::npos)
        throw std::invalid_argument("marked pair: expected 'marks;beta'");
    std::vector<int> marks = parse_int_list(text.substr(0, semi), "marked pair");
    return MarkedPair(std::move(marks), parse_subdiagonal(text.substr(semi + 1)));
}

GoodPair parse_good_pair(std::string_view text) {
    const size_t semi = text.find(';');
    if (semi == std::string_view::npos)
        throw std::invalid_argument("good pair: expected 'lambda;mu'");
    std::vector<int> lambda = parse_digits(text.substr(0, semi), "good pair");
    for (size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i - 1] >= lambda[i])
            throw std::invalid_argument("good pair: lambda digits must be strictly increasing");
    return GoodPair(Partition(std::move(lambda)), parse_composition(text.substr(semi + 1)));
}

std::string format_permutation(const Permutation& p) {
    return format_digits(p.values(), "permutation");
}

std::string format_composition(const Composition& m) {
    return format_digits(m.parts(), "composition");
}

std::string format_partition(const Partition& p) {
    return format_digits(p.decreasing_parts(), "partition");
}

std::string format_subdiagonal(const SubdiagonalSequence& b) {
    return format_digits(b.entries(), "subdiagonal sequence");
}

std::string format_signed_tuple(const SignedTuple& t) {
    std::string out;
    for (size_t i = 0; i < t.partitions().size(); ++i) {
        if (i > 0)
            out.push_back(',');
        out += format_partition(t.partitions()[i]);
    }
    out.push_back(';');
    out += format_composition(t.tail());
    return out;
}

std::string format_marked_pair(const MarkedPair& p) {
    std::string out;
    for (size_t i = 0; i < p.marks().size(); ++i) {
        if (i > 0)
            out.push_back(',');
        out += std::to_string(p.marks()[i]);
    }
    out.push_back(';');
    out += format_subdiagonal(p.beta());
    return out;
}

std::string format_good_pair(const GoodPair& g) {
    std::string out = format_digits(g.lambda().parts(), "good pair");
    out.push_back(';');
    out += format_composition(g.mu());
    return out;
}

} // namespace fewinv
