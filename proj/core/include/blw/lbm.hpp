#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blw/denote.hpp"
#include "blw/sloping.hpp"
#include "blw/syntax.hpp"

namespace blw {

/// A finite linear Bova-Montagna structure: k linearly ordered worlds
/// (0 < 1 < ... < k-1) and one sloping valuation per atom. Immutable
/// after construction; evaluation is pure and reentrant.
class LBMStructure {
 public:
  using Valuation = std::map<std::string, SlopingFunction>;

  /// Throws std::invalid_argument if worlds == 0 or any valuation has a
  /// different frame size. (Sloping-ness is a SlopingFunction invariant.)
  LBMStructure(std::size_t worlds, Valuation valuation);

  std::size_t worlds() const { return worlds_; }
  const Valuation& valuation() const { return valuation_; }

  /// Throws std::invalid_argument for an atom with no valuation.
  const SlopingFunction& atom_valuation(const std::string& name) const;

 private:
  std::size_t worlds_;
  Valuation valuation_;
};

/// Value of a formula at a world:
///   top -> 1, bot -> 0; &, |, * pointwise at w;
///   -> is the floored infimum of the pointwise implication over v >= w.
/// Throws std::out_of_range on a bad world, std::invalid_argument on an
/// unassigned atom.
MVValue eval(const LBMStructure& m, std::size_t w, const Formula& f);

/// The whole value profile [eval(m,0,f), ..., eval(m,k-1,f)]; always
/// sloping.
SlopingFunction formula_profile(const LBMStructure& m, const Formula& f);

/// Witness for a failing sequent: the least world where the monoidal fold
/// of the context exceeds the conclusion, with both values.
struct SequentFailure {
  std::size_t world;
  MVValue premise_value;
  MVValue conclusion_value;
};

/// A sequent holds when the context fold stays below the conclusion at
/// every world; the empty context folds to 1. Returns the least failing
/// world, or nullopt when the sequent holds.
std::optional<SequentFailure> holds(const LBMStructure& m, const Sequent& s);

/// A linear intuitionistic Kripke structure: persistent boolean atom
/// valuations over the k-world chain (once true, true from then on).
class ClassicalLinearKripke {
 public:
  using Truth = std::map<std::string, std::vector<bool>>;

  /// Throws std::invalid_argument if worlds == 0, a valuation has the
  /// wrong length, or a valuation is not persistent.
  ClassicalLinearKripke(std::size_t worlds, Truth truth);

  std::size_t worlds() const { return worlds_; }
  const Truth& truth() const { return truth_; }

 private:
  std::size_t worlds_;
  Truth truth_;
};

/// View a classical structure as an LBM structure (true -> 1, false -> 0);
/// persistent boolean sequences are sloping.
LBMStructure embed_classical(const ClassicalLinearKripke& c);

/// Standard intuitionistic evaluation over the linear frame; implication
/// quantifies over v >= w. Defined for tensor-free formulas only: throws
/// std::invalid_argument when the formula contains *.
bool classical_eval(const ClassicalLinearKripke& c, std::size_t w, const Formula& f);

}  // namespace blw
