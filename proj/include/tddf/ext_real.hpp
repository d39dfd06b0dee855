#pragma once

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tddf {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Element of the extended non-negative reals [0, inf].
///
/// The point at infinity is IEEE +inf, used purely as a symbol: it is never
/// produced by overflow inside this library and never replaced by a large
/// finite sentinel. Negative values and NaN are rejected at construction.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  ExtReal(double v) : v_(v) {  // NOLINT(google-explicit-constructor)
    if (!(v >= 0.0)) throw std::invalid_argument("ExtReal must be a non-negative real or inf");
  }

  static constexpr ExtReal infinity() { return ExtReal(Raw{}, kInf); }

  constexpr double value() const { return v_; }
  constexpr bool is_inf() const { return v_ == kInf; }
  constexpr operator double() const { return v_; }  // NOLINT(google-explicit-constructor)

  friend constexpr bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(ExtReal a, ExtReal b) { return a.v_ <=> b.v_; }

 private:
  struct Raw {};
  constexpr ExtReal(Raw, double v) : v_(v) {}
  double v_ = 0.0;
};

/// Formats a number with 17 significant digits, or the literal `inf`.
std::string format_number(double v);

/// Parses a decimal number or the literal `inf`; throws std::invalid_argument.
double parse_number(std::string_view token);

}  // namespace tddf
