#include "blw/search.hpp"

#include <atomic>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace blw {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void validate(const SearchBounds& b) {
  if (b.max_worlds < 1 || b.max_denominator < 1)
    throw std::invalid_argument("SearchBounds: bounds must be at least 1");
}

/// Uniform draw in [0, bound) by rejection; mt19937_64 output is
/// specified bit for bit, so results are reproducible everywhere.
u64 draw_below(std::mt19937_64& gen, u64 bound) {
  const u64 max = std::numeric_limits<u64>::max();
  const u64 limit = max - max % bound;
  u64 x;
  do {
    x = gen();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::string> dedupe(const std::vector<std::string>& atoms) {
  std::vector<std::string> out;
  for (const auto& a : atoms) {
    bool seen = false;
    for (const auto& b : out) seen = seen || a == b;
    if (!seen) out.push_back(a);
  }
  return out;
}

/// Valuation with index `idx` in the lexicographic product order: the
/// first atom is the most significant digit.
LBMStructure structure_at(const std::vector<std::string>& atoms,
                          const std::vector<SlopingFunction>& candidates,
                          std::size_t worlds, u64 idx) {
  const u64 base = candidates.size();
  LBMStructure::Valuation valuation;
  for (std::size_t j = atoms.size(); j-- > 0;) {
    valuation.emplace(atoms[j], candidates[static_cast<std::size_t>(idx % base)]);
    idx /= base;
  }
  return LBMStructure(worlds, std::move(valuation));
}

struct BlockHit {
  u64 index;
  SequentFailure failure;
};

/// Scans one (k, n) block for the minimal failing valuation index.
/// Workers claim ascending chunks and skip indices at or above the best
/// hit so far; every index below the final hit is evaluated, so the
/// result does not depend on the schedule.
std::optional<BlockHit> scan_block(const Sequent& s, const std::vector<std::string>& atoms,
                                   const std::vector<SlopingFunction>& candidates,
                                   std::size_t worlds, u64 total, unsigned workers) {
  constexpr u64 kChunk = 256;
  std::atomic<u64> next{0};
  std::atomic<u64> best{std::numeric_limits<u64>::max()};

  const auto worker = [&] {
    for (;;) {
      const u64 start = next.fetch_add(kChunk, std::memory_order_relaxed);
      if (start >= total || start >= best.load(std::memory_order_acquire)) return;
      const u64 end = std::min(total, start + kChunk);
      for (u64 i = start; i < end; ++i) {
        if (i >= best.load(std::memory_order_acquire)) return;
        const LBMStructure m = structure_at(atoms, candidates, worlds, i);
        if (holds(m, s)) {
          u64 cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  };

  if (workers <= 1 || total <= kChunk) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const u64 hit = best.load();
  if (hit == std::numeric_limits<u64>::max()) return std::nullopt;
  const LBMStructure m = structure_at(atoms, candidates, worlds, hit);
  return BlockHit{hit, *holds(m, s)};
}

}  // namespace

std::vector<SlopingFunction> enumerate_sloping(std::size_t k, std::size_t n) {
  if (k < 1 || n < 1)
    throw std::invalid_argument("enumerate_sloping: k and n must be at least 1");
  std::vector<SlopingFunction> out;
  out.reserve(1 + k * n);
  out.push_back(SlopingFunction::constant_zero(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 1; a <= n; ++a) {
      out.push_back(SlopingFunction::step(
          k, i, MVValue(static_cast<std::int64_t>(a), static_cast<std::int64_t>(n))));
    }
  }
  return out;
}

SearchOutcome find_countermodel(const Sequent& s, const SearchBounds& bounds,
                                unsigned max_threads) {
  validate(bounds);
  SearchOutcome out{bounds, 0, std::nullopt};
  const std::vector<std::string> atoms = atoms_of(s);

  if (atoms.empty()) {
    // Closed sequents take the same value on every frame; one world
    // suffices.
    const LBMStructure m(1, {});
    out.structures_checked = 1;
    if (const auto failure = holds(m, s))
      out.countermodel = Countermodel{m, failure->world, failure->premise_value,
                                      failure->conclusion_value};
    return out;
  }

  unsigned workers = max_threads == 0 ? std::thread::hardware_concurrency() : max_threads;
  if (workers == 0) workers = 1;

  for (std::size_t k = 1; k <= bounds.max_worlds; ++k) {
    for (std::size_t n = 1; n <= bounds.max_denominator; ++n) {
      const std::vector<SlopingFunction> candidates = enumerate_sloping(k, n);
      u128 total128 = 1;
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        total128 *= candidates.size();
        if (total128 > std::numeric_limits<u64>::max())
          throw std::overflow_error("find_countermodel: valuation space too large");
      }
      const u64 total = static_cast<u64>(total128);
      if (const auto hit = scan_block(s, atoms, candidates, k, total, workers)) {
        out.structures_checked += hit->index + 1;
        out.countermodel =
            Countermodel{structure_at(atoms, candidates, k, hit->index), hit->failure.world,
                         hit->failure.premise_value, hit->failure.conclusion_value};
        return out;
      }
      out.structures_checked += total;
    }
  }
  return out;
}

LBMStructure random_lbm(const std::vector<std::string>& atoms, std::size_t k,
                        std::size_t n, std::uint64_t seed) {
  if (k < 1 || n < 1) throw std::invalid_argument("random_lbm: k and n must be at least 1");
  const std::vector<SlopingFunction> candidates = enumerate_sloping(k, n);
  std::mt19937_64 gen(seed);
  LBMStructure::Valuation valuation;
  for (const auto& atom : dedupe(atoms)) {
    const u64 pick = draw_below(gen, candidates.size());
    valuation.emplace(atom, candidates[static_cast<std::size_t>(pick)]);
  }
  return LBMStructure(k, std::move(valuation));
}

std::vector<Sequent> collect_sequents(const NDProof& p) {
  std::vector<Sequent> out;
  const auto walk = [&out](const NDProof& node, const auto& self) -> void {
    out.push_back(node.sequent);
    for (const NDProof& premise : node.premises) self(premise, self);
  };
  walk(p, walk);
  return out;
}

FuzzReport fuzz_sequents(std::span<const Sequent> sequents, std::uint64_t trials,
                         const SearchBounds& bounds, std::uint64_t seed) {
  validate(bounds);
  FuzzReport report;
  report.sequents = sequents.size();
  report.trials = trials;
  std::mt19937_64 gen(seed);
  for (std::size_t si = 0; si < sequents.size(); ++si) {
    const Sequent& s = sequents[si];
    const std::vector<std::string> atoms = atoms_of(s);
    for (u64 t = 0; t < trials; ++t) {
      const std::size_t k = 1 + static_cast<std::size_t>(draw_below(gen, bounds.max_worlds));
      const std::size_t n =
          1 + static_cast<std::size_t>(draw_below(gen, bounds.max_denominator));
      const LBMStructure m = random_lbm(atoms, k, n, gen());
      if (const auto failure = holds(m, s)) {
        report.witness = FuzzWitness{si, s, m, failure->world, failure->premise_value,
                                     failure->conclusion_value};
        return report;
      }
    }
  }
  return report;
}

FuzzReport soundness_fuzz(const NDProof& p, std::uint64_t trials,
                          const SearchBounds& bounds, std::uint64_t seed) {
  check_nd(p);
  const std::vector<Sequent> sequents = collect_sequents(p);
  return fuzz_sequents(sequents, trials, bounds, seed);
}

}  // namespace blw
