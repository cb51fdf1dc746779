#pragma once

#include <map>
#include <string>

#include "blw/lbm.hpp"
#include "blw/sloping.hpp"
#include "blw/syntax.hpp"

namespace blw {

// The poset product over the k-world chain with a standard MV-chain at
// every index: its elements are the sloping functions of size k, the
// lattice and monoid operations act pointwise (slope_combine), and the
// residual below completes the algebra. Over a chain the element order is
// total, so the algebra is itself a chain.

/// Atom assignment into the algebra of sloping functions.
using AtomAssignment = std::map<std::string, SlopingFunction>;

/// Residual of the product algebra, computed as the floored infimum of
/// the pointwise implication over v >= w. Throws std::invalid_argument on
/// a size mismatch.
SlopingFunction pp_impl(const SlopingFunction& f, const SlopingFunction& g);

/// The residual written as a guarded case split:
///   f(w) -> g(w) when f <= g strictly above w, else 0.
/// A distinct code path from pp_impl; agreement on sloping inputs is a
/// standing test obligation.
SlopingFunction pp_impl_cases(const SlopingFunction& f, const SlopingFunction& g);

/// Interpretation of a formula as an element of the size-k algebra:
/// structural recursion with slope_combine for &, |, * and pp_impl for
/// ->; bot and top go to the constant functions. Throws
/// std::invalid_argument on an unassigned atom or when an assigned
/// element has a size other than k.
SlopingFunction pp_denote(const AtomAssignment& h, std::size_t k, const Formula& f);

/// Valid under h: the denotation is constantly 1.
bool pp_valid(const AtomAssignment& h, std::size_t k, const Formula& f);

/// The induced LBM structure reads atoms off h pointwise; its formula
/// profile must coincide with the algebraic denotation at every world.
/// Exposed as a test oracle; contractually always true.
bool pp_agrees_with_lbm(const AtomAssignment& h, std::size_t k, const Formula& f);

}  // namespace blw
