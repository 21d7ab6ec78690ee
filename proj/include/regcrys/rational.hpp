#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace regcrys {

/// A reduced positive rational p/q. Slopes never leave exact arithmetic.
class RationalSlope {
 public:
  RationalSlope() = default;
  RationalSlope(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// floor(self * t) and ceil(self * t - 1).
  std::int64_t floor_times(std::int64_t t) const;
  std::int64_t ceil_times_minus_one(std::int64_t t) const;

  std::string str() const;
  static RationalSlope parse(std::string_view text);

  friend bool operator==(const RationalSlope&, const RationalSlope&) = default;
  friend std::strong_ordering operator<=>(const RationalSlope& a, const RationalSlope& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

RationalSlope operator-(std::int64_t k, const RationalSlope& y);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace regcrys
