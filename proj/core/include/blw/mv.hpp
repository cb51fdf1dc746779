#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace blw {

/// An exact rational in the unit interval, the carrier of the standard
/// MV-chain. Stored in lowest terms; 0 is 0/1 and 1 is 1/1. All chain
/// operations are closed on every finite subchain {0, 1/n, ..., 1}: the
/// denominator of a result always divides the lcm of the operand
/// denominators.
///
/// Arithmetic is exact by construction. The chain operations test
/// equality with 1 (the Monteiro-Baaz floor, the sloping condition), so
/// floating point is not usable here.
class MVValue {
 public:
  /// Zero.
  MVValue() : num_(0), den_(1) {}

  /// num/den, reduced. Throws std::invalid_argument unless
  /// 0 <= num <= den and den > 0.
  MVValue(std::int64_t num, std::int64_t den);

  static MVValue zero() { return MVValue(); }
  static MVValue one() { return MVValue(1, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  friend bool operator==(const MVValue& a, const MVValue& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const MVValue& a, const MVValue& b);

  /// "0", "1", or "a/b".
  std::string str() const;

  /// Inverse of str(); also accepts unreduced "a/b".
  static MVValue parse(std::string_view text);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// The standard MV-chain operations on [0,1]:
//   x & y = min{x,y}        x | y = max{x,y}
//   x * y = max{0, x+y-1}   x -> y = min{1, 1-x+y}
MVValue mv_and(const MVValue& x, const MVValue& y);
MVValue mv_or(const MVValue& x, const MVValue& y);
MVValue mv_otimes(const MVValue& x, const MVValue& y);
MVValue mv_impl(const MVValue& x, const MVValue& y);

/// Monteiro-Baaz floor: 1 if x = 1, else 0.
MVValue mv_floor(const MVValue& x);

}  // namespace blw
