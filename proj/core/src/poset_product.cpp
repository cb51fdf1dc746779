#include "blw/poset_product.hpp"

#include <stdexcept>
#include <vector>

namespace blw {

SlopingFunction pp_impl(const SlopingFunction& f, const SlopingFunction& g) {
  if (f.size() != g.size()) throw std::invalid_argument("pp_impl: size mismatch");
  const std::size_t k = f.size();
  std::vector<MVValue> pointwise;
  pointwise.reserve(k);
  for (std::size_t w = 0; w < k; ++w) pointwise.push_back(mv_impl(f.at(w), g.at(w)));
  std::vector<MVValue> out;
  out.reserve(k);
  for (std::size_t w = 0; w < k; ++w) out.push_back(floored_inf(pointwise, w));
  return SlopingFunction(std::move(out));
}

SlopingFunction pp_impl_cases(const SlopingFunction& f, const SlopingFunction& g) {
  if (f.size() != g.size()) throw std::invalid_argument("pp_impl_cases: size mismatch");
  const std::size_t k = f.size();
  std::vector<MVValue> out;
  out.reserve(k);
  for (std::size_t w = 0; w < k; ++w) {
    bool dominated = true;
    for (std::size_t v = w + 1; v < k && dominated; ++v) dominated = f.at(v) <= g.at(v);
    out.push_back(dominated ? mv_impl(f.at(w), g.at(w)) : MVValue::zero());
  }
  return SlopingFunction(std::move(out));
}

SlopingFunction pp_denote(const AtomAssignment& h, std::size_t k, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const auto it = h.find(f.atom_name());
      if (it == h.end())
        throw std::invalid_argument("pp_denote: unassigned atom \"" + f.atom_name() + "\"");
      if (it->second.size() != k)
        throw std::invalid_argument("pp_denote: element size mismatch for \"" +
                                    f.atom_name() + "\"");
      return it->second;
    }
    case Formula::Kind::Bottom: return SlopingFunction::constant_zero(k);
    case Formula::Kind::Top: return SlopingFunction::constant_one(k);
    case Formula::Kind::And:
      return slope_combine(pp_denote(h, k, f.left()), pp_denote(h, k, f.right()),
                           SlopeOp::And);
    case Formula::Kind::Or:
      return slope_combine(pp_denote(h, k, f.left()), pp_denote(h, k, f.right()),
                           SlopeOp::Or);
    case Formula::Kind::Tensor:
      return slope_combine(pp_denote(h, k, f.left()), pp_denote(h, k, f.right()),
                           SlopeOp::Otimes);
    case Formula::Kind::Implies:
      return pp_impl(pp_denote(h, k, f.left()), pp_denote(h, k, f.right()));
  }
  throw std::logic_error("pp_denote: unreachable");
}

bool pp_valid(const AtomAssignment& h, std::size_t k, const Formula& f) {
  const SlopingFunction d = pp_denote(h, k, f);
  for (std::size_t w = 0; w < k; ++w)
    if (!d.at(w).is_one()) return false;
  return true;
}

bool pp_agrees_with_lbm(const AtomAssignment& h, std::size_t k, const Formula& f) {
  const SlopingFunction algebraic = pp_denote(h, k, f);
  const LBMStructure m(k, h);
  const SlopingFunction profile = formula_profile(m, f);
  return algebraic == profile;
}

}  // namespace blw
