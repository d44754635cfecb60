#ifndef ORELAB_FIXED_HPP
#define ORELAB_FIXED_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace orelab {

/// Exact rational with a fixed denominator: the value is num / Den.
template <std::int64_t Den> struct Fixed {
  static constexpr std::int64_t denominator = Den;
  std::int64_t num = 0;

  static constexpr Fixed integer(std::int64_t k) { return {k * Den}; }

  constexpr Fixed operator+(Fixed o) const { return {num + o.num}; }
  constexpr Fixed operator-(Fixed o) const { return {num - o.num}; }
  constexpr Fixed operator-() const { return {-num}; }
  constexpr Fixed operator*(std::int64_t k) const { return {num * k}; }
  constexpr Fixed &operator+=(Fixed o) {
    num += o.num;
    return *this;
  }
  constexpr Fixed &operator-=(Fixed o) {
    num -= o.num;
    return *this;
  }
  constexpr auto operator<=>(const Fixed &) const = default;

  /// Same value over a multiple of the denominator.
  template <std::int64_t Other> constexpr Fixed<Other> widen() const {
    static_assert(Other % Den == 0);
    return {num * (Other / Den)};
  }

  std::string to_string() const {
    return std::to_string(num) + "/" + std::to_string(Den);
  }
};

using Rat21 = Fixed<21>;
using Rat84 = Fixed<84>;

inline constexpr Rat21 kEpsilon{1};
inline constexpr Rat21 kDelta{8};
inline constexpr Rat21 kP{48};
inline constexpr Rat21 kQ{8};

} // namespace orelab

#endif // ORELAB_FIXED_HPP
