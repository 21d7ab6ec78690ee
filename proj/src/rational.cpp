#include "regcrys/rational.hpp"

#include <numeric>

#include "regcrys/partition.hpp"
#include "regcrys/text_format.hpp"

namespace regcrys {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

RationalSlope::RationalSlope(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num <= 0) throw DomainError("slopes must be positive");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t RationalSlope::floor_times(std::int64_t t) const { return floor_div(num_ * t, den_); }

std::int64_t RationalSlope::ceil_times_minus_one(std::int64_t t) const {
  return ceil_div(num_ * t - den_, den_);
}

std::string RationalSlope::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

RationalSlope RationalSlope::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    const std::string head(text.substr(0, slash));
    std::size_t used = 0;
    const long long p = std::stoll(head, &used);
    if (used != head.size()) throw ParseError("bad slope");
    long long q = 1;
    if (slash != std::string_view::npos) {
      const std::string tail(text.substr(slash + 1));
      q = std::stoll(tail, &used);
      if (used != tail.size()) throw ParseError("bad slope");
    }
    if (p <= 0 || q <= 0) throw ParseError("bad slope");
    return RationalSlope(p, q);
  } catch (const std::logic_error&) {
    throw ParseError("malformed slope '" + std::string(text) + "' (expected P or P/Q)");
  } catch (const ParseError&) {
    throw ParseError("malformed slope '" + std::string(text) + "' (expected positive P or P/Q)");
  }
}

RationalSlope operator-(std::int64_t k, const RationalSlope& y) {
  return RationalSlope(k * y.den() - y.num(), y.den());
}

}  // namespace regcrys
