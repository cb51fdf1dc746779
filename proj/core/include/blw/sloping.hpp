#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "blw/mv.hpp"

namespace blw {

/// True iff the sequence satisfies the sloping condition: a value above 0
/// at index i forces the value 1 at every later index.
bool slope_check(std::span<const MVValue> values);

/// Floored infimum at world w over a finite linear frame:
///   min{ f(w), inf over v > w of floor(f(v)) }
/// with the empty infimum (w maximal) equal to 1. Defined for arbitrary
/// sequences, sloping or not. Throws std::out_of_range on a bad index.
MVValue floored_inf(std::span<const MVValue> values, std::size_t w);

/// The same operator written as a case split:
///   f(w) if every later value is 1, else 0.
/// Kept as a separate code path; agreement with floored_inf is a standing
/// test obligation.
MVValue floored_inf_two_case(std::span<const MVValue> values, std::size_t w);

/// A sloping map from the k-world linear frame {0 < 1 < ... < k-1} into
/// the unit interval. Construction enforces the sloping condition, so a
/// value of this type is sloping by invariant: either all zero, or zeros
/// followed by one value in (0,1] followed by ones.
class SlopingFunction {
 public:
  /// Throws std::invalid_argument if values is empty or not sloping.
  explicit SlopingFunction(std::vector<MVValue> values);

  static SlopingFunction constant_zero(std::size_t k);
  static SlopingFunction constant_one(std::size_t k);

  /// Zeros below `world`, `value` at `world`, ones above. `value` must be
  /// positive for the result to be in canonical step position.
  static SlopingFunction step(std::size_t k, std::size_t world, const MVValue& value);

  std::size_t size() const { return values_.size(); }
  const std::vector<MVValue>& values() const { return values_; }
  const MVValue& at(std::size_t w) const;

  friend bool operator==(const SlopingFunction& a, const SlopingFunction& b) {
    return a.values_ == b.values_;
  }

  /// "[0, 1/2, 1]" for diagnostics.
  std::string str() const;

 private:
  std::vector<MVValue> values_;
};

enum class SlopeOp { And, Or, Otimes };

/// Pointwise combination; the result is again sloping. Throws
/// std::invalid_argument on a size mismatch.
SlopingFunction slope_combine(const SlopingFunction& f, const SlopingFunction& g,
                              SlopeOp op);

/// Equal-size sloping functions are totally ordered pointwise; ties
/// report EQ. Throws std::invalid_argument on a size mismatch.
enum class SlopeOrder { LE, EQ, GE };
SlopeOrder slope_compare(const SlopingFunction& f, const SlopingFunction& g);

}  // namespace blw
