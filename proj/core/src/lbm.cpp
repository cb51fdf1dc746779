#include "blw/lbm.hpp"

#include <span>
#include <stdexcept>

namespace blw {

LBMStructure::LBMStructure(std::size_t worlds, Valuation valuation)
    : worlds_(worlds), valuation_(std::move(valuation)) {
  if (worlds_ == 0)
    throw std::invalid_argument("LBMStructure: frame must have at least one world");
  for (const auto& [name, f] : valuation_) {
    if (f.size() != worlds_)
      throw std::invalid_argument("LBMStructure: valuation of \"" + name +
                                  "\" has the wrong frame size");
  }
}

const SlopingFunction& LBMStructure::atom_valuation(const std::string& name) const {
  const auto it = valuation_.find(name);
  if (it == valuation_.end())
    throw std::invalid_argument("LBMStructure: unassigned atom \"" + name + "\"");
  return it->second;
}

namespace {

// Bottom-up value profile; the implication clause needs the children at
// every world, so the recursion computes whole profiles. Profiles live as
// k-value frames on one flat stack: a binary node combines the top two
// frames in place and pops one, so an evaluation allocates at most once.
void profile_onto(const LBMStructure& m, const Formula& f, std::vector<MVValue>& stack) {
  const std::size_t k = m.worlds();
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const std::vector<MVValue>& values = m.atom_valuation(f.atom_name()).values();
      stack.insert(stack.end(), values.begin(), values.end());
      return;
    }
    case Formula::Kind::Bottom: stack.insert(stack.end(), k, MVValue::zero()); return;
    case Formula::Kind::Top: stack.insert(stack.end(), k, MVValue::one()); return;
    default: break;
  }
  profile_onto(m, f.left(), stack);
  profile_onto(m, f.right(), stack);
  MVValue* left = stack.data() + stack.size() - 2 * k;
  MVValue* right = stack.data() + stack.size() - k;
  switch (f.kind()) {
    case Formula::Kind::And:
      for (std::size_t w = 0; w < k; ++w) left[w] = mv_and(left[w], right[w]);
      break;
    case Formula::Kind::Or:
      for (std::size_t w = 0; w < k; ++w) left[w] = mv_or(left[w], right[w]);
      break;
    case Formula::Kind::Tensor:
      for (std::size_t w = 0; w < k; ++w) left[w] = mv_otimes(left[w], right[w]);
      break;
    case Formula::Kind::Implies:
      // Pointwise implication first, then its floored infimum per world.
      for (std::size_t w = 0; w < k; ++w) right[w] = mv_impl(left[w], right[w]);
      for (std::size_t w = 0; w < k; ++w)
        left[w] = floored_inf(std::span<const MVValue>(right, k), w);
      break;
    default: break;
  }
  stack.resize(stack.size() - k);
}

std::vector<MVValue> profile_rec(const LBMStructure& m, const Formula& f) {
  std::vector<MVValue> stack;
  profile_onto(m, f, stack);
  return stack;
}

}  // namespace

MVValue eval(const LBMStructure& m, std::size_t w, const Formula& f) {
  if (w >= m.worlds()) throw std::out_of_range("eval: world out of range");
  return profile_rec(m, f)[w];
}

SlopingFunction formula_profile(const LBMStructure& m, const Formula& f) {
  return SlopingFunction(profile_rec(m, f));
}

std::optional<SequentFailure> holds(const LBMStructure& m, const Sequent& s) {
  const std::size_t k = m.worlds();
  std::vector<MVValue> stack;
  stack.insert(stack.end(), k, MVValue::one());
  for (const auto& hyp : s.context) {
    profile_onto(m, hyp, stack);
    MVValue* fold = stack.data();
    const MVValue* top = stack.data() + k;
    for (std::size_t w = 0; w < k; ++w) fold[w] = mv_otimes(fold[w], top[w]);
    stack.resize(k);
  }
  profile_onto(m, s.conclusion, stack);
  for (std::size_t w = 0; w < k; ++w) {
    if (stack[w] > stack[k + w]) return SequentFailure{w, stack[w], stack[k + w]};
  }
  return std::nullopt;
}

ClassicalLinearKripke::ClassicalLinearKripke(std::size_t worlds, Truth truth)
    : worlds_(worlds), truth_(std::move(truth)) {
  if (worlds_ == 0)
    throw std::invalid_argument("ClassicalLinearKripke: frame must have at least one world");
  for (const auto& [name, values] : truth_) {
    if (values.size() != worlds_)
      throw std::invalid_argument("ClassicalLinearKripke: valuation of \"" + name +
                                  "\" has the wrong frame size");
    for (std::size_t w = 0; w + 1 < values.size(); ++w) {
      if (values[w] && !values[w + 1])
        throw std::invalid_argument("ClassicalLinearKripke: valuation of \"" + name +
                                    "\" is not persistent");
    }
  }
}

LBMStructure embed_classical(const ClassicalLinearKripke& c) {
  LBMStructure::Valuation valuation;
  for (const auto& [name, values] : c.truth()) {
    std::vector<MVValue> mv;
    mv.reserve(values.size());
    for (const bool b : values) mv.push_back(b ? MVValue::one() : MVValue::zero());
    valuation.emplace(name, SlopingFunction(std::move(mv)));
  }
  return LBMStructure(c.worlds(), std::move(valuation));
}

namespace {

// Truth at every world at once, on the same flat-stack scheme as
// profile_onto. The implication clause quantifies over v >= w, which is a
// right-to-left conjunction scan.
void classical_onto(const ClassicalLinearKripke& c, const Formula& f,
                    std::vector<char>& stack) {
  const std::size_t k = c.worlds();
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const auto it = c.truth().find(f.atom_name());
      if (it == c.truth().end())
        throw std::invalid_argument("classical_eval: unassigned atom \"" + f.atom_name() +
                                    "\"");
      for (std::size_t w = 0; w < k; ++w) stack.push_back(it->second[w] ? 1 : 0);
      return;
    }
    case Formula::Kind::Bottom: stack.insert(stack.end(), k, 0); return;
    case Formula::Kind::Top: stack.insert(stack.end(), k, 1); return;
    case Formula::Kind::Tensor:
      throw std::invalid_argument("classical_eval: formula is not tensor-free");
    default: break;
  }
  classical_onto(c, f.left(), stack);
  classical_onto(c, f.right(), stack);
  char* left = stack.data() + stack.size() - 2 * k;
  const char* right = stack.data() + stack.size() - k;
  switch (f.kind()) {
    case Formula::Kind::And:
      for (std::size_t w = 0; w < k; ++w) left[w] = left[w] && right[w];
      break;
    case Formula::Kind::Or:
      for (std::size_t w = 0; w < k; ++w) left[w] = left[w] || right[w];
      break;
    case Formula::Kind::Implies: {
      char suffix = 1;
      for (std::size_t w = k; w-- > 0;) {
        suffix = suffix && (!left[w] || right[w]);
        left[w] = suffix;
      }
      break;
    }
    default: break;
  }
  stack.resize(stack.size() - k);
}

}  // namespace

bool classical_eval(const ClassicalLinearKripke& c, std::size_t w, const Formula& f) {
  if (w >= c.worlds()) throw std::out_of_range("classical_eval: world out of range");
  std::vector<char> stack;
  classical_onto(c, f, stack);
  return stack[w] != 0;
}

}  // namespace blw
