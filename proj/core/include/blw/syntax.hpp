#pragma once

#include <memory>
#include <string>
#include <vector>

namespace blw {

/// Immutable propositional formula over atoms, the constants bot/top and
/// the connectives & (lattice meet), | (join), * (monoidal conjunction)
/// and -> (residual implication). Copies share structure.
class Formula {
 public:
  enum class Kind { Atom, Bottom, Top, And, Or, Tensor, Implies };

  /// Atom names match [a-z][a-zA-Z0-9_]*; "bot" and "top" are reserved.
  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula tensor(Formula left, Formula right);
  static Formula implies(Formula left, Formula right);

  Kind kind() const;
  bool is_binary() const;

  /// Requires kind() == Kind::Atom.
  const std::string& atom_name() const;
  /// Require is_binary(). The references live as long as this formula's
  /// node, i.e. as long as any copy of this formula.
  const Formula& left() const;
  const Formula& right() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  Formula() = default;  // detached state, only inside Node
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Kind kind, Formula left, Formula right);
  std::shared_ptr<const Node> node_;
};

/// A sequent: an ordered context (multiplicity and position significant;
/// there is no contraction) and one conclusion.
struct Sequent {
  std::vector<Formula> context;
  Formula conclusion;

  Sequent(std::vector<Formula> ctx, Formula concl)
      : context(std::move(ctx)), conclusion(std::move(concl)) {}

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.context == b.context && a.conclusion == b.conclusion;
  }
};

/// Distinct atom names in first-occurrence order.
std::vector<std::string> atoms_of(const Formula& f);
/// Context first (left to right), then conclusion.
std::vector<std::string> atoms_of(const Sequent& s);

/// Minimal-parentheses rendering; parses back to an identical tree.
std::string render(const Formula& f);
std::string render(const Sequent& s);

/// Nested prefix form, e.g. "Implies(Tensor(p,q),r)".
std::string ast_string(const Formula& f);

}  // namespace blw
