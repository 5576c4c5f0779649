#pragma once

#include <string>
#include <string_view>

#include "fewinv/bijections.hpp"
#include "fewinv/partition.hpp"
#include "fewinv/permutation.hpp"

namespace fewinv {

// Compact digit-string notation for CLI and tests. Every value is a single
// digit, so only parts/letters <= 9 are representable; use the JSON forms for
// anything larger. Parsers throw std::invalid_argument on malformed input,
// formatters throw std::domain_error on values > 9.
//
//   permutation       "4213675"
//   composition       "643452"           ("" is the empty composition)
//   partition         "6211"             (weakly decreasing digits)
//   subdiagonal seq   "0103"
//   signed tuple      "11,62;643452"     (partitions before ';', may be empty)
//   marked pair       "1,3;0103"         (comma-separated marks before ';')
//   good pair         "13;152"           (increasing lambda before ';')

Permutation parse_permutation(std::string_view text);
Composition parse_composition(std::string_view text);
Partition parse_partition(std::string_view text);
SubdiagonalSequence parse_subdiagonal(std::string_view text);
SignedTuple parse_signed_tuple(std::string_view text);
MarkedPair parse_marked_pair(std::string_view text);
GoodPair parse_good_pair(std::string_view text);

std::string format_permutation(const Permutation& p);
std::string format_composition(const Composition& m);
std::string format_partition(const Partition& p);
std::string format_subdiagonal(const SubdiagonalSequence& b);
std::string format_signed_tuple(const SignedTuple& t);
std::string format_marked_pair(const MarkedPair& p);
std::string format_good_pair(const GoodPair& g);

} // namespace fewinv
