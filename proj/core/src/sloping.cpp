#include "blw/sloping.hpp"

#include <stdexcept>

namespace blw {

bool slope_check(std::span<const MVValue> values) {
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (!values[i].is_zero() && !values[i + 1].is_one()) return false;
  }
  // With values in [0,1], "1 from i+1 on" reduces to "1 at i+1".
  return true;
}

MVValue floored_inf(std::span<const MVValue> values, std::size_t w) {
  if (w >= values.size()) throw std::out_of_range("floored_inf: world out of range");
  MVValue inf = MVValue::one();  // empty infimum
  for (std::size_t v = w + 1; v < values.size(); ++v)
    inf = mv_and(inf, mv_floor(values[v]));
  return mv_and(values[w], inf);
}

MVValue floored_inf_two_case(std::span<const MVValue> values, std::size_t w) {
  if (w >= values.size()) throw std::out_of_range("floored_inf: world out of range");
  for (std::size_t v = w + 1; v < values.size(); ++v)
    if (!values[v].is_one()) return MVValue::zero();
  return values[w];
}

SlopingFunction::SlopingFunction(std::vector<MVValue> values) : values_(std::move(values)) {
  if (values_.empty())
    throw std::invalid_argument("SlopingFunction: frame must have at least one world");
  if (!slope_check(values_))
    throw std::invalid_argument("SlopingFunction: sequence violates the sloping condition");
}

SlopingFunction SlopingFunction::constant_zero(std::size_t k) {
  return SlopingFunction(std::vector<MVValue>(k, MVValue::zero()));
}

SlopingFunction SlopingFunction::constant_one(std::size_t k) {
  return SlopingFunction(std::vector<MVValue>(k, MVValue::one()));
}

SlopingFunction SlopingFunction::step(std::size_t k, std::size_t world, const MVValue& value) {
  if (world >= k) throw std::out_of_range("SlopingFunction::step: world out of range");
  std::vector<MVValue> values(k, MVValue::zero());
  values[world] = value;
  for (std::size_t i = world + 1; i < k; ++i) values[i] = MVValue::one();
  return SlopingFunction(std::move(values));
}

const MVValue& SlopingFunction::at(std::size_t w) const {
  if (w >= values_.size()) throw std::out_of_range("SlopingFunction: world out of range");
  return values_[w];
}

std::string SlopingFunction::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += values_[i].str();
  }
  return out + "]";
}

SlopingFunction slope_combine(const SlopingFunction& f, const SlopingFunction& g,
                              SlopeOp op) {
  if (f.size() != g.size())
    throw std::invalid_argument("slope_combine: size mismatch");
  std::vector<MVValue> out;
  out.reserve(f.size());
  for (std::size_t w = 0; w < f.size(); ++w) {
    switch (op) {
      case SlopeOp::And: out.push_back(mv_and(f.at(w), g.at(w))); break;
      case SlopeOp::Or: out.push_back(mv_or(f.at(w), g.at(w))); break;
      case SlopeOp::Otimes: out.push_back(mv_otimes(f.at(w), g.at(w))); break;
    }
  }
  return SlopingFunction(std::move(out));
}

SlopeOrder slope_compare(const SlopingFunction& f, const SlopingFunction& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("slope_compare: size mismatch");
  bool le = true, ge = true;
  for (std::size_t w = 0; w < f.size(); ++w) {
    const auto c = f.at(w) <=> g.at(w);
    if (c == std::strong_ordering::less) ge = false;
    if (c == std::strong_ordering::greater) le = false;
  }
  if (le && ge) return SlopeOrder::EQ;
  if (le) return SlopeOrder::LE;
  if (ge) return SlopeOrder::GE;
  // Unreachable for sloping inputs: equal-size sloping functions are
  // linearly ordered.
  throw std::logic_error("slope_compare: incomparable inputs (sloping invariant broken)");
}

}  // namespace blw
