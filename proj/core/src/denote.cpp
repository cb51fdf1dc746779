#include "blw/denote.hpp"

#include <stdexcept>

namespace blw {

MVValue mv_denote(const Assignment& assignment, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const auto it = assignment.find(f.atom_name());
      if (it == assignment.end())
        throw std::invalid_argument("mv_denote: unassigned atom \"" + f.atom_name() + "\"");
      return it->second;
    }
    case Formula::Kind::Bottom: return MVValue::zero();
    case Formula::Kind::Top: return MVValue::one();
    case Formula::Kind::And:
      return mv_and(mv_denote(assignment, f.left()), mv_denote(assignment, f.right()));
    case Formula::Kind::Or:
      return mv_or(mv_denote(assignment, f.left()), mv_denote(assignment, f.right()));
    case Formula::Kind::Tensor:
      return mv_otimes(mv_denote(assignment, f.left()), mv_denote(assignment, f.right()));
    case Formula::Kind::Implies:
      return mv_impl(mv_denote(assignment, f.left()), mv_denote(assignment, f.right()));
  }
  throw std::logic_error("mv_denote: unreachable");
}

}  // namespace blw
