#include "blw/mv.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace blw {

namespace {

using i128 = __int128;

// lcm with an overflow guard; denominators come from user model files, so
// reject anything that leaves the int64 range instead of wrapping.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  const i128 l = static_cast<i128>(a / g) * b;
  if (l > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("MVValue: denominator lcm out of range");
  return static_cast<std::int64_t>(l);
}

}  // namespace

MVValue::MVValue(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("MVValue: denominator must be positive");
  if (num < 0 || num > den)
    throw std::invalid_argument("MVValue: value must lie in [0,1]");
  const std::int64_t g = num == 0 ? den : std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::strong_ordering operator<=>(const MVValue& a, const MVValue& b) {
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string MVValue::str() const {
  if (is_zero()) return "0";
  if (is_one()) return "1";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

MVValue MVValue::parse(std::string_view text) {
  const auto read_int = [](std::string_view s) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end)
      throw std::invalid_argument("MVValue: malformed rational \"" + std::string(s) + "\"");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const std::int64_t n = read_int(text);
    return MVValue(n, 1);
  }
  return MVValue(read_int(text.substr(0, slash)), read_int(text.substr(slash + 1)));
}

MVValue mv_and(const MVValue& x, const MVValue& y) { return x <= y ? x : y; }

MVValue mv_or(const MVValue& x, const MVValue& y) { return x >= y ? x : y; }

MVValue mv_otimes(const MVValue& x, const MVValue& y) {
  // max{0, x + y - 1} over the common denominator.
  const std::int64_t l = checked_lcm(x.den(), y.den());
  const std::int64_t sum = x.num() * (l / x.den()) + y.num() * (l / y.den()) - l;
  return sum <= 0 ? MVValue::zero() : MVValue(sum, l);
}

MVValue mv_impl(const MVValue& x, const MVValue& y) {
  // min{1, 1 - x + y} over the common denominator.
  const std::int64_t l = checked_lcm(x.den(), y.den());
  const std::int64_t sum = l - x.num() * (l / x.den()) + y.num() * (l / y.den());
  return sum >= l ? MVValue::one() : MVValue(sum, l);
}

MVValue mv_floor(const MVValue& x) {
  return x.is_one() ? MVValue::one() : MVValue::zero();
}

}  // namespace blw
