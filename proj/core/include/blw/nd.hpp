#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blw/axioms.hpp"
#include "blw/syntax.hpp"

namespace blw {

/// The rules of the natural deduction calculus. Contexts are sequences:
/// rules bind their active formulas at the end of the context, and Ex
/// (one adjacent transposition per node) is the only way to move them.
enum class NDRule {
  Ax,      // phi |- phi
  W,       // G |- psi           =>  G, phi |- psi
  Ex,      // G, a, b, D |- chi  =>  G, b, a, D |- chi
  ImpI,    // G, phi |- psi      =>  G |- phi -> psi
  ImpE,    // G |- phi -> psi ;  D |- phi   =>  G, D |- psi
  TensI,   // G |- phi ;  D |- psi          =>  G, D |- phi * psi
  TensE,   // G, phi, psi |- chi ;  D |- phi * psi  =>  G, D |- chi
  AndI,    // G |- phi ;  G |- psi          =>  G |- phi & psi
  AndE1,   // G |- phi & psi     =>  G |- phi
  AndE2,   // G |- phi & psi     =>  G |- psi
  OrI1,    // G |- phi           =>  G |- phi | psi
  OrI2,    // G |- psi           =>  G |- phi | psi
  OrE,     // G |- phi | psi ;  D, phi |- chi ;  D, psi |- chi  =>  G, D |- chi
  Div,     // G, phi, phi -> psi |- chi  =>  G, psi, psi -> phi |- chi
  BotE,    // G |- bot           =>  G |- phi
  Prelin,  // G |- (phi -> psi) | (psi -> phi)
};

std::string nd_rule_name(NDRule rule);
std::optional<NDRule> nd_rule_from_name(std::string_view name);

/// A derivation tree. Every node carries its full sequent; the checker
/// validates each node's local shape against its rule and premises.
struct NDProof {
  NDRule rule;
  Sequent sequent;
  std::vector<NDProof> premises;
};

/// Rejection of one node, with its position in the tree ("root", or a
/// dotted premise path like "0.2"), the rule, and the violated constraint.
class NdError : public std::runtime_error {
 public:
  NdError(std::string path, NDRule rule, const std::string& constraint);
  const std::string& path() const { return path_; }
  NDRule rule() const { return rule_; }

 private:
  std::string path_;
  NDRule rule_;
};

/// Validates every node bottom-up and returns the root sequent.
const Sequent& check_nd(const NDProof& p);

// Proof builders. Each constructs a single correctly shaped node over
// already built premises and throws std::invalid_argument when the
// premises do not fit the rule.
NDProof nd_ax(Formula f);
NDProof nd_weaken(NDProof p, Formula f);
NDProof nd_exchange(NDProof p, std::size_t i);  // swap context positions i, i+1
NDProof nd_imp_i(NDProof p);
NDProof nd_imp_e(NDProof implication, NDProof argument);
NDProof nd_tens_i(NDProof l, NDProof r);
NDProof nd_tens_e(NDProof open, NDProof tensored);
NDProof nd_and_i(NDProof l, NDProof r);
NDProof nd_and_e1(NDProof p);
NDProof nd_and_e2(NDProof p);
NDProof nd_or_i1(NDProof p, Formula right);
NDProof nd_or_i2(NDProof p, Formula left);
NDProof nd_or_e(NDProof disjunction, NDProof left_case, NDProof right_case);
NDProof nd_div(NDProof p);
NDProof nd_bot_e(NDProof p, Formula f);
NDProof nd_prelin(std::vector<Formula> context, Formula phi, Formula psi);

// The resource-sensitive deduction theorem, as proof transformers. All
// four outputs pass check_nd; the round trips preserve the conclusion
// sequent exactly.

/// G, psi |- chi  ~>  G |- psi -> chi. Requires a nonempty context.
NDProof curry(NDProof p);
/// G |- psi -> chi  ~>  G, psi |- chi.
NDProof uncurry(NDProof p);
/// G, phi, psi |- chi  ~>  G, phi * psi |- chi. Requires two context slots.
NDProof tensor_fold(NDProof p);
/// G, phi * psi |- chi  ~>  G, phi, psi |- chi.
NDProof tensor_unfold(NDProof p);

/// A closed derivation of the given axiom schema instantiated at
/// (phi, psi, chi); schemas that mention fewer metavariables ignore the
/// extras. The result passes check_nd and concludes |- <instance>.
NDProof axiom_derivation(AxiomId id, const Formula& phi, const Formula& psi,
                         const Formula& chi);

}  // namespace blw
