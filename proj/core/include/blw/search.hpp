#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blw/lbm.hpp"
#include "blw/nd.hpp"
#include "blw/sloping.hpp"
#include "blw/syntax.hpp"

namespace blw {

/// Bounds for the countermodel search: frames up to max_worlds worlds,
/// valuations drawn from the finite subchains with denominators up to
/// max_denominator. The search is refutation-sound but only
/// bounded-complete: an exhausted search means "no countermodel within
/// these bounds", never "valid".
struct SearchBounds {
  std::size_t max_worlds = 3;
  std::size_t max_denominator = 4;
};

/// All sloping functions on the k-world frame with values in
/// {0, 1/n, ..., 1}: the constant zero first, then one function per
/// (step position, step value) in lexicographic order. Exactly 1 + k*n
/// functions, no duplicates.
std::vector<SlopingFunction> enumerate_sloping(std::size_t k, std::size_t n);

/// A refuting structure and the least world it fails at, with both sides
/// of the failed inequality.
struct Countermodel {
  LBMStructure structure;
  std::size_t world;
  MVValue premise_value;
  MVValue conclusion_value;
};

struct SearchOutcome {
  SearchBounds bounds;
  /// Structures evaluated, in the fixed iteration order, up to and
  /// including the hit; the full product count when nothing was found.
  std::uint64_t structures_checked = 0;
  std::optional<Countermodel> countermodel;

  bool found() const { return countermodel.has_value(); }
};

/// Exhaustive search in a fixed order: frames k = 1..K outermost,
/// denominators n = 1..N within each frame, and for each (k, n) the full
/// Cartesian product of enumerated valuations over the sequent's atoms,
/// lexicographic with the first atom most significant. Returns the first
/// failure. Sequents with no atoms are evaluated once on the one-world
/// frame. The product space may be partitioned across up to max_threads
/// workers (0 = one per hardware thread); the outcome is the same
/// regardless of the schedule.
SearchOutcome find_countermodel(const Sequent& s, const SearchBounds& bounds,
                                unsigned max_threads = 0);

/// A structure with an independently uniform valuation per atom, drawn
/// from enumerate_sloping(k, n) by a deterministic generator: equal seeds
/// give equal structures.
LBMStructure random_lbm(const std::vector<std::string>& atoms, std::size_t k,
                        std::size_t n, std::uint64_t seed);

struct FuzzWitness {
  std::size_t sequent_index;  // preorder position in the proof
  Sequent sequent;
  LBMStructure structure;
  std::size_t world;
  MVValue premise_value;
  MVValue conclusion_value;
};

struct FuzzReport {
  std::uint64_t sequents = 0;
  std::uint64_t trials = 0;
  std::optional<FuzzWitness> witness;

  bool passed() const { return !witness.has_value(); }
};

/// Every node sequent of a proof tree in preorder.
std::vector<Sequent> collect_sequents(const NDProof& p);

/// Evaluates each sequent on `trials` random structures within the
/// bounds (frame size and denominator drawn uniformly); reports the first
/// violation found.
FuzzReport fuzz_sequents(std::span<const Sequent> sequents, std::uint64_t trials,
                         const SearchBounds& bounds, std::uint64_t seed);

/// check_nd(p), then fuzz every node sequent. A violation here would
/// witness a soundness failure or an implementation bug.
FuzzReport soundness_fuzz(const NDProof& p, std::uint64_t trials,
                          const SearchBounds& bounds, std::uint64_t seed);

}  // namespace blw
