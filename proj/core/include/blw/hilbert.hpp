#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "blw/axioms.hpp"
#include "blw/nd.hpp"
#include "blw/syntax.hpp"

namespace blw {

/// Modus ponens citing two earlier lines (1-based): `implication` holds
/// phi -> psi, `antecedent` holds phi.
struct MpRef {
  std::size_t implication;
  std::size_t antecedent;
};

struct HilbertLine {
  Formula formula;
  std::variant<AxiomId, MpRef> justification;
};

/// A Hilbert-style derivation: a list of lines, each an axiom instance or
/// modus ponens from earlier lines; the last line is the conclusion.
struct HilbertProof {
  std::vector<HilbertLine> lines;
};

/// Rejection of one line (1-based) with the violated constraint.
class HilbertError : public std::runtime_error {
 public:
  HilbertError(std::size_t line, const std::string& constraint);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The schema of an axiom, as a formula over the metavariable atoms
/// "phi", "psi", "chi".
const Formula& axiom_schema(AxiomId id);

/// The substitution instantiating `id` to `f`, if one exists. Bindings
/// cover exactly the metavariables the schema mentions.
std::optional<std::map<std::string, Formula>> match_axiom_subst(AxiomId id,
                                                                const Formula& f);

/// All axiom ids whose schema matches f, in A1..A14 order.
std::vector<AxiomId> match_axiom(const Formula& f);

/// Validates every line and returns the last formula.
Formula check_hilbert(const HilbertProof& p);

/// The constructive half of the equivalence with the natural deduction
/// calculus: axiom lines become stored derivations, modus ponens becomes
/// ImpE; the result passes check_nd and concludes |- check_hilbert(p).
NDProof hilbert_to_nd(const HilbertProof& p);

}  // namespace blw
