#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace modkernel {

// Exact multiple of 1/2, stored as twice its value.
class Half {
 public:
  constexpr Half() = default;
  static constexpr Half from_twice(std::int64_t twice) { return Half(twice); }
  static constexpr Half from_int(std::int64_t value) { return Half(2 * value); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  // "3", "3/2", "-1/2".
  std::string to_string() const;

  friend constexpr Half operator+(Half a, Half b) { return Half(a.twice_ + b.twice_); }
  friend constexpr Half operator-(Half a, Half b) { return Half(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(Half, Half) = default;

 private:
  constexpr explicit Half(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

inline std::string Half::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace modkernel
