#include "regcrys/text_format.hpp"

#include <charconv>
#include <sstream>

namespace regcrys {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw ParseError("malformed integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(',', start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty() || body == "-" || body == "0") return Partition{};
  std::vector<int> parts;
  for (std::string_view token : split_commas(body)) {
    token = trim(token);
    const std::size_t caret = token.find('^');
    const int value = parse_int(token.substr(0, caret), text);
    const int mult = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), text);
    if (value < 0 || mult < 0) throw ParseError("negative entry in '" + std::string(text) + "'");
    parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
  }
  for (std::size_t r = 1; r < parts.size(); ++r)
    if (parts[r] > parts[r - 1]) throw ParseError("parts of '" + std::string(text) + "' are not weakly decreasing");
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& la) {
  if (la.empty()) return "-";
  std::ostringstream out;
  for (int r = 1; r <= la.length(); ++r) out << (r > 1 ? "," : "") << la[r];
  return out.str();
}

std::string format_partition_compact(const Partition& la) {
  if (la.empty()) return "-";
  std::ostringstream out;
  int r = 1;
  bool first = true;
  while (r <= la.length()) {
    int k = r;
    while (k < la.length() && la[k + 1] == la[r]) ++k;
    out << (first ? "" : ",") << la[r];
    if (k > r) out << '^' << (k - r + 1);
    first = false;
    r = k + 1;
  }
  return out.str();
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (std::string_view token : split_commas(text)) out.push_back(parse_int(token, text));
  return out;
}

}  // namespace regcrys
