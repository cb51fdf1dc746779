#pragma once

#include <map>
#include <string>

#include "blw/mv.hpp"
#include "blw/syntax.hpp"

namespace blw {

/// Single-point valuation of atoms in the standard MV-chain.
using Assignment = std::map<std::string, MVValue>;

/// Denotation of a formula under an assignment: structural recursion with
/// the chain operations, bot -> 0, top -> 1. Throws std::invalid_argument
/// on an unassigned atom.
MVValue mv_denote(const Assignment& assignment, const Formula& f);

}  // namespace blw
