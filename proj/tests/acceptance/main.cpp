// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit
// on any failure. Usage: blw_acceptance <corpus-dir>
//
// Every tolerance here is exact equality over exact rationals; the random
// sweeps are seeded and reproducible.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "blw/denote.hpp"
#include "blw/hilbert.hpp"
#include "blw/lbm.hpp"
#include "blw/nd.hpp"
#include "blw/parse.hpp"
#include "blw/poset_product.hpp"
#include "blw/proof_io.hpp"
#include "blw/search.hpp"

#include "../support/gen.hpp"

namespace {

using namespace blw;
namespace fs = std::filesystem;

std::string g_corpus_dir;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<MVValue> chain(std::size_t n) {
  std::vector<MVValue> out;
  for (std::size_t a = 0; a <= n; ++a)
    out.emplace_back(static_cast<std::int64_t>(a), static_cast<std::int64_t>(n));
  return out;
}

// ---------------------------------------------------------------------------
// C1: MV-chain laws on the exhaustive L12 grid.
std::string c1_mv_laws() {
  const auto grid = chain(12);
  for (const MVValue& x : grid) {
    if (!(mv_otimes(x, MVValue::one()) == x)) return "unit law failed at " + x.str();
    if (!(mv_otimes(x, MVValue::zero()) == MVValue::zero()))
      return "annihilator failed at " + x.str();
    for (const MVValue& y : grid) {
      if (!(mv_otimes(x, y) == mv_otimes(y, x))) return "otimes not commutative";
      if (!(mv_and(x, y) == mv_and(y, x)) || !(mv_or(x, y) == mv_or(y, x)))
        return "lattice operations not commutative";
      if (!(mv_otimes(x, mv_impl(x, y)) == mv_and(x, y)))
        return "divisibility failed at (" + x.str() + ", " + y.str() + ")";
      if (!(mv_or(mv_impl(x, y), mv_impl(y, x)) == MVValue::one()))
        return "prelinearity failed at (" + x.str() + ", " + y.str() + ")";
      for (const MVValue& z : grid) {
        if (!(mv_otimes(mv_otimes(x, y), z) == mv_otimes(x, mv_otimes(y, z))))
          return "otimes not associative";
        if ((mv_otimes(x, y) <= z) != (x <= mv_impl(y, z)))
          return "residuation adjunction failed at (" + x.str() + ", " + y.str() + ", " +
                 z.str() + ")";
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// C2: the two floored-infimum forms agree on every L3 sequence with
// k <= 4, and the induced map is sloping.
std::string c2_floored_inf() {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& seq : testgen::all_tuples(k, 3)) {
      std::vector<MVValue> induced;
      for (std::size_t w = 0; w < k; ++w) {
        const MVValue a = floored_inf(seq, w);
        const MVValue b = floored_inf_two_case(seq, w);
        if (!(a == b)) return "forms disagree at k=" + std::to_string(k);
        induced.push_back(a);
      }
      if (!slope_check(induced)) return "induced map is not sloping";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// C3: sloping enumeration vs brute-force filtering, k, n <= 4.
std::string c3_enumeration() {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto enumerated = enumerate_sloping(k, n);
      if (enumerated.size() != 1 + k * n)
        return "count mismatch at k=" + std::to_string(k) + ", n=" + std::to_string(n);
      auto brute = testgen::sloping_by_filter(k, n);
      std::vector<std::vector<MVValue>> got;
      for (const auto& f : enumerated) got.push_back(f.values());
      auto key = [](const std::vector<MVValue>& a, const std::vector<MVValue>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      };
      std::sort(got.begin(), got.end(), key);
      std::sort(brute.begin(), brute.end(), key);
      if (got != brute)
        return "set mismatch at k=" + std::to_string(k) + ", n=" + std::to_string(n);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// C4: profiles of sampled formulas on seeded random structures are
// sloping and monotone. 1000 structures x 200 formulas.
std::string c4_profiles() {
  std::mt19937_64 gen(20250809);
  const std::vector<std::string> pool{"p", "q", "r"};
  for (int round = 0; round < 1000; ++round) {
    const std::size_t k = 1 + gen() % 4;
    const std::size_t n = 1 + gen() % 4;
    const std::size_t natoms = 1 + gen() % 3;
    const std::vector<std::string> atoms(pool.begin(), pool.begin() + natoms);
    const LBMStructure m = random_lbm(atoms, k, n, gen());
    for (int j = 0; j < 200; ++j) {
      const Formula f = testgen::random_formula(gen, atoms, 3);
      SlopingFunction profile = formula_profile(m, f);  // throws if not sloping
      for (std::size_t w = 0; w + 1 < profile.size(); ++w) {
        if (profile.at(w) > profile.at(w + 1))
          return "profile not monotone for " + render(f) + " on round " +
                 std::to_string(round);
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// C5: the classical linear Kripke embedding agrees with the chain-valued
// evaluation on every tensor-free formula of height <= 3 over {p, q} and
// every persistent two-atom structure with k <= 3 worlds.
std::string c5_classical_embedding() {
  // All persistent structures, k <= 3: first-true positions per atom.
  std::vector<ClassicalLinearKripke> structures;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t tp = 0; tp <= k; ++tp) {
      for (std::size_t tq = 0; tq <= k; ++tq) {
        std::vector<bool> p(k, false), q(k, false);
        for (std::size_t w = tp; w < k; ++w) p[w] = true;
        for (std::size_t w = tq; w < k; ++w) q[w] = true;
        structures.emplace_back(k, ClassicalLinearKripke::Truth{{"p", p}, {"q", q}});
      }
    }
  }
  std::vector<LBMStructure> embedded;
  for (const auto& c : structures) embedded.push_back(embed_classical(c));

  const auto agree = [&](const Formula& f) {
    for (std::size_t si = 0; si < structures.size(); ++si) {
      const SlopingFunction profile = formula_profile(embedded[si], f);
      for (std::size_t w = 0; w < structures[si].worlds(); ++w) {
        if (classical_eval(structures[si], w, f) != profile.at(w).is_one()) return false;
      }
    }
    return true;
  };

  const std::vector<Formula> leaves{Formula::atom("p"), Formula::atom("q")};
  const std::vector<Formula> depth2 =
      testgen::formulas_up_to_height(leaves, 2, /*allow_tensor=*/false);

  std::atomic<bool> ok{true};
  std::atomic<std::uint64_t> checked{0};
  for (const Formula& f : leaves) {
    if (!agree(f)) return "mismatch at an atom";
    ++checked;
  }

  // Height <= 3 composites are exactly op(a, b) with a, b of height <= 2.
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 2;
  std::vector<std::thread> threads;
  std::atomic<std::size_t> next{0};
  const auto body = [&] {
    std::uint64_t local = 0;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= depth2.size() || !ok.load(std::memory_order_relaxed)) break;
      for (const Formula& b : depth2) {
        for (const Formula& f : {Formula::conj(depth2[i], b), Formula::disj(depth2[i], b),
                                 Formula::implies(depth2[i], b)}) {
          if (!agree(f)) {
            ok.store(false, std::memory_order_relaxed);
            return;
          }
          ++local;
        }
      }
    }
    checked.fetch_add(local);
  };
  for (unsigned t = 0; t < workers; ++t) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  if (!ok.load()) return "classical and chain-valued evaluation disagree";
  const std::uint64_t expected = 2 + 3ull * depth2.size() * depth2.size();
  if (checked.load() != expected)
    return "enumeration incomplete: " + std::to_string(checked.load()) + " of " +
           std::to_string(expected);
  return {};
}

// ---------------------------------------------------------------------------
// C6: the algebraic denotation agrees with the Kripke profile on 500
// seeded samples, and the element order is total on the (4, 4) chain.
std::string c6_poset_agreement() {
  std::mt19937_64 gen(1111);
  const std::vector<std::string> pool{"p", "q", "r"};
  for (int round = 0; round < 500; ++round) {
    const std::size_t k = 1 + gen() % 4;
    const std::size_t n = 1 + gen() % 4;
    const std::size_t natoms = 1 + gen() % 3;
    const std::vector<std::string> atoms(pool.begin(), pool.begin() + natoms);
    const auto elements = enumerate_sloping(k, n);
    AtomAssignment h;
    for (const auto& atom : atoms) h.emplace(atom, elements[gen() % elements.size()]);
    const Formula f = testgen::random_formula(gen, atoms, 4);
    if (!pp_agrees_with_lbm(h, k, f))
      return "denotation mismatch for " + render(f) + " on round " + std::to_string(round);
  }
  const auto elements = enumerate_sloping(4, 4);
  for (const auto& f : elements) {
    for (const auto& g : elements) {
      try {
        slope_compare(f, g);
      } catch (const std::exception&) {
        return "element order not total";
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// C7: proof systems and the deduction-theorem transformers.
std::string c7_proof_systems() {
  const Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  for (int i = 0; i < kAxiomCount; ++i) {
    const AxiomId id = static_cast<AxiomId>(i);
    const NDProof derivation = axiom_derivation(id, p, q, r);
    const Sequent& concl = check_nd(derivation);
    if (!concl.context.empty()) return axiom_name(id) + ": derivation context not empty";
    if (!match_axiom_subst(id, concl.conclusion))
      return axiom_name(id) + ": derivation concludes the wrong instance";
    HilbertProof one;
    one.lines.push_back({concl.conclusion, id});
    if (!(check_hilbert(one) == concl.conclusion))
      return axiom_name(id) + ": one-line proof rejected";
  }

  // Bundled corpus: load, check, translate, re-check.
  const fs::path dir = fs::path(g_corpus_dir) / "hilbert";
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.size() != 10)
    return "expected 10 bundled proofs, found " + std::to_string(files.size());
  bool saw_projection = false;
  for (const auto& file : files) {
    const HilbertProof proof = load_hilbert_proof(read_file(file));
    const Formula conclusion = check_hilbert(proof);
    const NDProof translated = hilbert_to_nd(proof);
    if (!(check_nd(translated) == Sequent({}, conclusion)))
      return file.filename().string() + ": translation changes the conclusion";
    if (proof.lines.size() == 5 && conclusion == parse_formula("(p*q) -> p"))
      saw_projection = true;
  }
  if (!saw_projection) return "five-line (p*q) -> p proof missing from the corpus";

  // 50 seeded proofs with at least two context formulas: both round
  // trips apply and preserve the conclusion sequent exactly.
  std::mt19937_64 gen(2222);
  int collected = 0;
  while (collected < 50) {
    const NDProof proof = testgen::random_proof(gen, {"p", "q", "r"});
    if (proof.sequent.context.size() < 2) continue;
    ++collected;
    if (!(check_nd(uncurry(curry(proof))) == proof.sequent))
      return "curry/uncurry round trip changed a conclusion";
    if (!(check_nd(tensor_unfold(tensor_fold(proof))) == proof.sequent))
      return "fold/unfold round trip changed a conclusion";
  }
  return {};
}

// ---------------------------------------------------------------------------
// C8: soundness fuzzing over every corpus proof node; the corrupted
// control must produce a witness.
std::string c8_soundness_fuzz() {
  std::vector<NDProof> corpus;
  const Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  for (int i = 0; i < kAxiomCount; ++i)
    corpus.push_back(axiom_derivation(static_cast<AxiomId>(i), p, q, r));
  const fs::path dir = fs::path(g_corpus_dir) / "hilbert";
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& file : files)
    corpus.push_back(hilbert_to_nd(load_hilbert_proof(read_file(file))));
  for (const char* name : {"imp_refl.json", "prelin.json", "tensor_comm.json"})
    corpus.push_back(load_nd_proof(read_file(fs::path(g_corpus_dir) / "nd" / name)));

  std::uint64_t seed = 33001;
  for (const NDProof& proof : corpus) {
    const FuzzReport report = soundness_fuzz(proof, 500, {3, 4}, seed++);
    if (!report.passed())
      return "sound proof produced a witness at sequent " +
             render(report.witness->sequent);
  }

  const NDProof corrupted =
      load_nd_proof(read_file(fs::path(g_corpus_dir) / "nd" / "corrupt_contraction.json"));
  const auto sequents = collect_sequents(corrupted);
  const FuzzReport control = fuzz_sequents(sequents, 500, {3, 4}, 4242);
  if (control.passed()) return "negative control produced no witness";
  const auto confirm = holds(control.witness->structure, control.witness->sequent);
  if (!confirm || confirm->world != control.witness->world)
    return "negative-control witness failed re-evaluation";
  return {};
}

// ---------------------------------------------------------------------------
// C9: the boundary between BL and the contraction-full logic.
std::string c9_boundary() {
  if (!find_countermodel(parse_sequent("p |- p*p"), {1, 2}).found())
    return "p |- p*p not refuted at (1, 2)";
  if (!find_countermodel(parse_sequent("|- p -> p*p"), {1, 2}).found())
    return "|- p -> p*p not refuted at (1, 2)";
  if (find_countermodel(parse_sequent("|- (p->q)|(q->p)"), {4, 6}).found())
    return "prelinearity spuriously refuted";

  const Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  for (int i = 0; i < kAxiomCount; ++i) {
    const AxiomId id = static_cast<AxiomId>(i);
    const Formula instance = check_nd(axiom_derivation(id, p, q, r)).conclusion;
    const SearchOutcome out = find_countermodel(Sequent({}, instance), {4, 6});
    if (out.found()) return axiom_name(id) + " spuriously refuted";
  }

  // Contraction holds classically: p -> (p & p) at every world of every
  // one-atom persistent structure with k <= 3.
  const Formula contraction = parse_formula("p -> (p & p)");
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t tp = 0; tp <= k; ++tp) {
      std::vector<bool> truth(k, false);
      for (std::size_t w = tp; w < k; ++w) truth[w] = true;
      const ClassicalLinearKripke c(k, {{"p", truth}});
      for (std::size_t w = 0; w < k; ++w) {
        if (!classical_eval(c, w, contraction))
          return "classical contraction fails at k=" + std::to_string(k);
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// C10: one-world Kripke satisfaction coincides with the algebraic
// denotation over exhaustive L6 assignments, for 500 sampled formulas.
std::string c10_single_world_agreement() {
  std::mt19937_64 gen(5555);
  const std::vector<std::string> atoms{"p", "q"};
  const auto values = chain(6);
  for (int round = 0; round < 500; ++round) {
    const Formula f = testgen::random_formula(gen, atoms, 4);
    bool denote_all_one = true;
    bool holds_all = true;
    for (const MVValue& x : values) {
      for (const MVValue& y : values) {
        const Assignment assignment{{"p", x}, {"q", y}};
        const LBMStructure m(
            1, {{"p", SlopingFunction({x})}, {"q", SlopingFunction({y})}});
        const bool denoted_one = mv_denote(assignment, f) == MVValue::one();
        const bool held = !holds(m, Sequent({}, f)).has_value();
        if (denoted_one != held)
          return "pointwise disagreement for " + render(f) + " at (" + x.str() + ", " +
                 y.str() + ")";
        denote_all_one = denote_all_one && denoted_one;
        holds_all = holds_all && held;
      }
    }
    if (denote_all_one != holds_all) return "aggregate disagreement for " + render(f);
  }
  return {};
}

struct Criterion {
  const char* label;
  std::function<std::string()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: blw_acceptance <corpus-dir>\n";
    return 2;
  }
  g_corpus_dir = argv[1];

  const std::vector<Criterion> criteria{
      {"C1  MV-chain laws on the L12 grid", c1_mv_laws},
      {"C2  floored-infimum forms agree and slope", c2_floored_inf},
      {"C3  sloping enumeration matches brute force", c3_enumeration},
      {"C4  profiles are sloping and monotone", c4_profiles},
      {"C5  classical linear Kripke embedding", c5_classical_embedding},
      {"C6  algebraic denotation agrees with evaluation", c6_poset_agreement},
      {"C7  proof systems and transformers", c7_proof_systems},
      {"C8  soundness fuzzing with negative control", c8_soundness_fuzz},
      {"C9  contraction boundary between BL and GD", c9_boundary},
      {"C10 one-world satisfaction is algebraic validity", c10_single_world_agreement},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string message;
    try {
      message = criterion.run();
    } catch (const std::exception& e) {
      message = std::string("exception: ") + e.what();
    }
    const auto seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (message.empty()) {
      std::printf("[PASS] %s (%.1fs)\n", criterion.label, seconds);
    } else {
      ++failures;
      std::printf("[FAIL] %s (%.1fs): %s\n", criterion.label, seconds, message.c_str());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
