#include "blw/hilbert.hpp"

#include <array>

namespace blw {

namespace {

Formula meta_phi() { return Formula::atom("phi"); }
Formula meta_psi() { return Formula::atom("psi"); }
Formula meta_chi() { return Formula::atom("chi"); }

std::array<Formula, kAxiomCount> build_schemas() {
  const Formula p = meta_phi(), q = meta_psi(), r = meta_chi();
  const auto imp = [](const Formula& a, const Formula& b) { return Formula::implies(a, b); };
  return {
      imp(p, p),                                                          // A1
      imp(imp(p, q), imp(imp(q, r), imp(p, r))),                          // A2
      imp(Formula::tensor(p, q), Formula::tensor(q, p)),                  // A3
      imp(Formula::tensor(p, q), q),                                      // A4
      imp(imp(p, imp(q, r)), imp(Formula::tensor(p, q), r)),              // A5
      imp(imp(Formula::tensor(p, q), r), imp(p, imp(q, r))),              // A6
      imp(Formula::tensor(p, imp(p, q)), Formula::conj(p, q)),            // A7
      imp(Formula::conj(p, q), Formula::tensor(p, imp(p, q))),            // A8
      imp(Formula::conj(p, q), Formula::conj(q, p)),                      // A9
      imp(p, Formula::disj(p, q)),                                        // A10
      imp(q, Formula::disj(p, q)),                                        // A11
      imp(Formula::conj(imp(p, q), imp(r, q)), imp(Formula::disj(p, r), q)),  // A12
      imp(Formula::bottom(), p),                                          // A13
      Formula::disj(imp(p, q), imp(q, p)),                                // A14
  };
}

// One-sided matching: schema atoms are metavariables, everything in `f`
// is concrete.
bool match_into(const Formula& schema, const Formula& f,
                std::map<std::string, Formula>& subst) {
  switch (schema.kind()) {
    case Formula::Kind::Atom: {
      const auto [it, inserted] = subst.emplace(schema.atom_name(), f);
      return inserted || it->second == f;
    }
    case Formula::Kind::Bottom:
    case Formula::Kind::Top: return f.kind() == schema.kind();
    default:
      return f.kind() == schema.kind() && match_into(schema.left(), f.left(), subst) &&
             match_into(schema.right(), f.right(), subst);
  }
}

}  // namespace

HilbertError::HilbertError(std::size_t line, const std::string& constraint)
    : std::runtime_error("line " + std::to_string(line) + ": " + constraint), line_(line) {}

const Formula& axiom_schema(AxiomId id) {
  static const std::array<Formula, kAxiomCount> schemas = build_schemas();
  return schemas[static_cast<std::size_t>(id)];
}

std::optional<std::map<std::string, Formula>> match_axiom_subst(AxiomId id,
                                                                const Formula& f) {
  std::map<std::string, Formula> subst;
  if (!match_into(axiom_schema(id), f, subst)) return std::nullopt;
  return subst;
}

std::vector<AxiomId> match_axiom(const Formula& f) {
  std::vector<AxiomId> out;
  for (int i = 0; i < kAxiomCount; ++i) {
    const AxiomId id = static_cast<AxiomId>(i);
    if (match_axiom_subst(id, f)) out.push_back(id);
  }
  return out;
}

Formula check_hilbert(const HilbertProof& p) {
  if (p.lines.empty()) throw HilbertError(0, "proof has no lines");
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const std::size_t no = i + 1;
    const HilbertLine& line = p.lines[i];
    if (const auto* id = std::get_if<AxiomId>(&line.justification)) {
      if (!match_axiom_subst(*id, line.formula))
        throw HilbertError(no, "formula is not an instance of " + axiom_name(*id));
      continue;
    }
    const MpRef mp = std::get<MpRef>(line.justification);
    if (mp.implication < 1 || mp.implication >= no || mp.antecedent < 1 ||
        mp.antecedent >= no)
      throw HilbertError(no, "modus ponens may only cite earlier lines");
    const Formula& imp = p.lines[mp.implication - 1].formula;
    const Formula& ant = p.lines[mp.antecedent - 1].formula;
    if (imp.kind() != Formula::Kind::Implies)
      throw HilbertError(no, "cited line " + std::to_string(mp.implication) +
                                 " is not an implication");
    if (!(imp.left() == ant))
      throw HilbertError(no, "cited line " + std::to_string(mp.antecedent) +
                                 " does not match the antecedent");
    if (!(imp.right() == line.formula))
      throw HilbertError(no, "formula does not match the consequent of line " +
                                 std::to_string(mp.implication));
  }
  return p.lines.back().formula;
}

NDProof hilbert_to_nd(const HilbertProof& p) {
  check_hilbert(p);
  std::vector<NDProof> derived;
  derived.reserve(p.lines.size());
  for (const HilbertLine& line : p.lines) {
    if (const auto* id = std::get_if<AxiomId>(&line.justification)) {
      const auto subst = match_axiom_subst(*id, line.formula);
      const auto lookup = [&subst](const char* name) {
        const auto it = subst->find(name);
        return it == subst->end() ? Formula::top() : it->second;
      };
      derived.push_back(
          axiom_derivation(*id, lookup("phi"), lookup("psi"), lookup("chi")));
    } else {
      const MpRef mp = std::get<MpRef>(line.justification);
      derived.push_back(
          nd_imp_e(derived[mp.implication - 1], derived[mp.antecedent - 1]));
    }
  }
  return std::move(derived.back());
}

}  // namespace blw
