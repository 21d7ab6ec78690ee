#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "regcrys/partition.hpp"

namespace regcrys {

// Malformed textual input (partitions, integer lists, slopes).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "9,3^3,2"; "-" or the empty string denote the empty partition.
/// Whitespace around tokens is ignored.
Partition parse_partition(std::string_view text);

/// Plain comma-separated parts, "-" for the empty partition.
std::string format_partition(const Partition& la);

/// Exponent form, e.g. "9,3^3,2".
std::string format_partition_compact(const Partition& la);

std::vector<int> parse_int_list(std::string_view text);

}  // namespace regcrys
