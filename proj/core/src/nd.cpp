#include "blw/nd.hpp"

#include <array>
#include <utility>

namespace blw {

namespace {

constexpr std::array<std::pair<NDRule, const char*>, 16> kRuleNames = {{
    {NDRule::Ax, "Ax"},
    {NDRule::W, "W"},
    {NDRule::Ex, "Ex"},
    {NDRule::ImpI, "ImpI"},
    {NDRule::ImpE, "ImpE"},
    {NDRule::TensI, "TensI"},
    {NDRule::TensE, "TensE"},
    {NDRule::AndI, "AndI"},
    {NDRule::AndE1, "AndE1"},
    {NDRule::AndE2, "AndE2"},
    {NDRule::OrI1, "OrI1"},
    {NDRule::OrI2, "OrI2"},
    {NDRule::OrE, "OrE"},
    {NDRule::Div, "Div"},
    {NDRule::BotE, "BotE"},
    {NDRule::Prelin, "Prelin"},
}};

std::size_t rule_arity(NDRule rule) {
  switch (rule) {
    case NDRule::Ax:
    case NDRule::Prelin: return 0;
    case NDRule::ImpE:
    case NDRule::TensI:
    case NDRule::TensE:
    case NDRule::AndI: return 2;
    case NDRule::OrE: return 3;
    default: return 1;
  }
}

using Context = std::vector<Formula>;

Context concat(const Context& a, const Context& b) {
  Context out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Context drop_last(const Context& ctx, std::size_t n) {
  return Context(ctx.begin(), ctx.end() - static_cast<std::ptrdiff_t>(n));
}

bool is_concat(const Context& whole, const Context& a, const Context& b) {
  if (whole.size() != a.size() + b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(whole[i] == a[i])) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!(whole[a.size() + i] == b[i])) return false;
  return true;
}

bool adjacent_transposition(const Context& from, const Context& to) {
  if (from.size() != to.size() || from.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < from.size(); ++i) {
    if (!(to[i] == from[i + 1] && to[i + 1] == from[i])) continue;
    bool rest_equal = true;
    for (std::size_t j = 0; j < from.size() && rest_equal; ++j) {
      if (j == i || j == i + 1) continue;
      rest_equal = from[j] == to[j];
    }
    if (rest_equal) return true;
  }
  return false;
}

class Checker {
 public:
  void check(const NDProof& p, const std::string& path) {
    const std::size_t arity = rule_arity(p.rule);
    if (p.premises.size() != arity)
      fail(path, p.rule,
           "expects " + std::to_string(arity) + " premise(s), found " +
               std::to_string(p.premises.size()));
    for (std::size_t i = 0; i < p.premises.size(); ++i)
      check(p.premises[i], path + "." + std::to_string(i));
    check_shape(p, path);
  }

 private:
  [[noreturn]] static void fail(const std::string& path, NDRule rule,
                                const std::string& constraint) {
    throw NdError(path, rule, constraint);
  }

  static void check_shape(const NDProof& p, const std::string& path) {
    const Sequent& s = p.sequent;
    const auto premise = [&p](std::size_t i) -> const Sequent& {
      return p.premises[i].sequent;
    };
    switch (p.rule) {
      case NDRule::Ax:
        if (s.context.size() != 1 || !(s.context[0] == s.conclusion))
          fail(path, p.rule, "sequent must have the shape phi |- phi");
        return;

      case NDRule::W: {
        const Sequent& q = premise(0);
        if (s.context.size() != q.context.size() + 1 ||
            !is_concat(s.context, q.context, {s.context.back()}))
          fail(path, p.rule, "context must extend the premise context by one last formula");
        if (!(s.conclusion == q.conclusion))
          fail(path, p.rule, "conclusion must match the premise conclusion");
        return;
      }

      case NDRule::Ex: {
        const Sequent& q = premise(0);
        if (!(s.conclusion == q.conclusion))
          fail(path, p.rule, "conclusion must match the premise conclusion");
        if (!adjacent_transposition(q.context, s.context))
          fail(path, p.rule, "contexts must differ by one adjacent transposition");
        return;
      }

      case NDRule::ImpI: {
        const Sequent& q = premise(0);
        if (s.conclusion.kind() != Formula::Kind::Implies)
          fail(path, p.rule, "conclusion must be an implication");
        if (q.context.empty() || !(q.context.back() == s.conclusion.left()))
          fail(path, p.rule, "premise context must end with the antecedent");
        if (!(q.conclusion == s.conclusion.right()))
          fail(path, p.rule, "premise conclusion must be the consequent");
        if (!is_concat(q.context, s.context, {s.conclusion.left()}))
          fail(path, p.rule, "context must be the premise context without its last formula");
        return;
      }

      case NDRule::ImpE: {
        const Sequent& imp = premise(0);
        const Sequent& arg = premise(1);
        if (imp.conclusion.kind() != Formula::Kind::Implies)
          fail(path, p.rule, "first premise must conclude an implication");
        if (!(arg.conclusion == imp.conclusion.left()))
          fail(path, p.rule, "second premise must conclude the antecedent");
        if (!(s.conclusion == imp.conclusion.right()))
          fail(path, p.rule, "conclusion must be the consequent");
        if (!is_concat(s.context, imp.context, arg.context))
          fail(path, p.rule, "context must concatenate the premise contexts in order");
        return;
      }

      case NDRule::TensI: {
        if (s.conclusion.kind() != Formula::Kind::Tensor)
          fail(path, p.rule, "conclusion must be a tensor");
        if (!(premise(0).conclusion == s.conclusion.left()) ||
            !(premise(1).conclusion == s.conclusion.right()))
          fail(path, p.rule, "premises must conclude the tensor components in order");
        if (!is_concat(s.context, premise(0).context, premise(1).context))
          fail(path, p.rule, "context must concatenate the premise contexts in order");
        return;
      }

      case NDRule::TensE: {
        const Sequent& open = premise(0);
        const Sequent& tens = premise(1);
        if (tens.conclusion.kind() != Formula::Kind::Tensor)
          fail(path, p.rule, "second premise must conclude a tensor");
        if (open.context.size() < 2 ||
            !(open.context[open.context.size() - 2] == tens.conclusion.left()) ||
            !(open.context.back() == tens.conclusion.right()))
          fail(path, p.rule,
               "first premise context must end with the two tensor components");
        if (!(s.conclusion == open.conclusion))
          fail(path, p.rule, "conclusion must match the first premise conclusion");
        if (!is_concat(s.context, drop_last(open.context, 2), tens.context))
          fail(path, p.rule,
               "context must be the first premise context minus the components, then the "
               "second premise context");
        return;
      }

      case NDRule::AndI: {
        if (s.conclusion.kind() != Formula::Kind::And)
          fail(path, p.rule, "conclusion must be a conjunction");
        if (!(premise(0).conclusion == s.conclusion.left()) ||
            !(premise(1).conclusion == s.conclusion.right()))
          fail(path, p.rule, "premises must conclude the conjuncts in order");
        if (!(premise(0).context == s.context) || !(premise(1).context == s.context))
          fail(path, p.rule, "both premises must share the context verbatim");
        return;
      }

      case NDRule::AndE1:
      case NDRule::AndE2: {
        const Sequent& q = premise(0);
        if (q.conclusion.kind() != Formula::Kind::And)
          fail(path, p.rule, "premise must conclude a conjunction");
        const Formula want =
            p.rule == NDRule::AndE1 ? q.conclusion.left() : q.conclusion.right();
        if (!(s.conclusion == want))
          fail(path, p.rule, "conclusion must be the projected conjunct");
        if (!(q.context == s.context))
          fail(path, p.rule, "context must match the premise context");
        return;
      }

      case NDRule::OrI1:
      case NDRule::OrI2: {
        const Sequent& q = premise(0);
        if (s.conclusion.kind() != Formula::Kind::Or)
          fail(path, p.rule, "conclusion must be a disjunction");
        const Formula want =
            p.rule == NDRule::OrI1 ? s.conclusion.left() : s.conclusion.right();
        if (!(q.conclusion == want))
          fail(path, p.rule, "premise must conclude the injected disjunct");
        if (!(q.context == s.context))
          fail(path, p.rule, "context must match the premise context");
        return;
      }

      case NDRule::OrE: {
        const Sequent& disj = premise(0);
        const Sequent& lc = premise(1);
        const Sequent& rc = premise(2);
        if (disj.conclusion.kind() != Formula::Kind::Or)
          fail(path, p.rule, "first premise must conclude a disjunction");
        if (lc.context.empty() || !(lc.context.back() == disj.conclusion.left()))
          fail(path, p.rule, "left case context must end with the left disjunct");
        if (rc.context.empty() || !(rc.context.back() == disj.conclusion.right()))
          fail(path, p.rule, "right case context must end with the right disjunct");
        if (!(drop_last(lc.context, 1) == drop_last(rc.context, 1)))
          fail(path, p.rule, "case premises must share the context verbatim");
        if (!(lc.conclusion == rc.conclusion) || !(s.conclusion == lc.conclusion))
          fail(path, p.rule, "both cases and the conclusion must agree");
        if (!is_concat(s.context, disj.context, drop_last(lc.context, 1)))
          fail(path, p.rule,
               "context must concatenate the disjunction context and the shared case "
               "context");
        return;
      }

      case NDRule::Div: {
        const Sequent& q = premise(0);
        if (q.context.size() < 2)
          fail(path, p.rule, "premise context must end with phi, phi -> psi");
        const Formula& impl = q.context.back();
        const Formula& phi = q.context[q.context.size() - 2];
        if (impl.kind() != Formula::Kind::Implies || !(impl.left() == phi))
          fail(path, p.rule, "premise context must end with phi, phi -> psi");
        const Formula psi = impl.right();
        const Context expected =
            concat(drop_last(q.context, 2), {psi, Formula::implies(psi, phi)});
        if (!(s.context == expected))
          fail(path, p.rule, "context must end with psi, psi -> phi over the same prefix");
        if (!(s.conclusion == q.conclusion))
          fail(path, p.rule, "conclusion must match the premise conclusion");
        return;
      }

      case NDRule::BotE: {
        const Sequent& q = premise(0);
        if (q.conclusion.kind() != Formula::Kind::Bottom)
          fail(path, p.rule, "premise must conclude bot");
        if (!(q.context == s.context))
          fail(path, p.rule, "context must match the premise context");
        return;
      }

      case NDRule::Prelin: {
        const Formula& c = s.conclusion;
        const bool shaped = c.kind() == Formula::Kind::Or &&
                            c.left().kind() == Formula::Kind::Implies &&
                            c.right().kind() == Formula::Kind::Implies &&
                            c.left().left() == c.right().right() &&
                            c.left().right() == c.right().left();
        if (!shaped)
          fail(path, p.rule,
               "conclusion must have the shape (phi -> psi) | (psi -> phi)");
        return;
      }
    }
  }
};

}  // namespace

std::string nd_rule_name(NDRule rule) {
  for (const auto& [r, name] : kRuleNames)
    if (r == rule) return name;
  return "?";
}

std::optional<NDRule> nd_rule_from_name(std::string_view name) {
  for (const auto& [r, n] : kRuleNames)
    if (name == n) return r;
  return std::nullopt;
}

NdError::NdError(std::string path, NDRule rule, const std::string& constraint)
    : std::runtime_error("node " + path + " (" + nd_rule_name(rule) + "): " + constraint),
      path_(std::move(path)),
      rule_(rule) {}

const Sequent& check_nd(const NDProof& p) {
  Checker().check(p, "root");
  return p.sequent;
}

namespace {

[[noreturn]] void builder_fail(const char* builder, const char* what) {
  throw std::invalid_argument(std::string(builder) + ": " + what);
}

}  // namespace

NDProof nd_ax(Formula f) {
  Sequent s({f}, f);
  return NDProof{NDRule::Ax, std::move(s), {}};
}

NDProof nd_weaken(NDProof p, Formula f) {
  Sequent s(concat(p.sequent.context, {std::move(f)}), p.sequent.conclusion);
  return NDProof{NDRule::W, std::move(s), {std::move(p)}};
}

NDProof nd_exchange(NDProof p, std::size_t i) {
  if (i + 1 >= p.sequent.context.size())
    builder_fail("nd_exchange", "transposition position out of range");
  Context ctx = p.sequent.context;
  std::swap(ctx[i], ctx[i + 1]);
  Sequent s(std::move(ctx), p.sequent.conclusion);
  return NDProof{NDRule::Ex, std::move(s), {std::move(p)}};
}

NDProof nd_imp_i(NDProof p) {
  if (p.sequent.context.empty()) builder_fail("nd_imp_i", "premise context is empty");
  Formula antecedent = p.sequent.context.back();
  Sequent s(drop_last(p.sequent.context, 1),
            Formula::implies(std::move(antecedent), p.sequent.conclusion));
  return NDProof{NDRule::ImpI, std::move(s), {std::move(p)}};
}

NDProof nd_imp_e(NDProof implication, NDProof argument) {
  const Formula& concl = implication.sequent.conclusion;
  if (concl.kind() != Formula::Kind::Implies)
    builder_fail("nd_imp_e", "first premise does not conclude an implication");
  if (!(argument.sequent.conclusion == concl.left()))
    builder_fail("nd_imp_e", "second premise does not conclude the antecedent");
  Sequent s(concat(implication.sequent.context, argument.sequent.context), concl.right());
  return NDProof{NDRule::ImpE, std::move(s), {std::move(implication), std::move(argument)}};
}

NDProof nd_tens_i(NDProof l, NDProof r) {
  Sequent s(concat(l.sequent.context, r.sequent.context),
            Formula::tensor(l.sequent.conclusion, r.sequent.conclusion));
  return NDProof{NDRule::TensI, std::move(s), {std::move(l), std::move(r)}};
}

NDProof nd_tens_e(NDProof open, NDProof tensored) {
  const Formula& tens = tensored.sequent.conclusion;
  if (tens.kind() != Formula::Kind::Tensor)
    builder_fail("nd_tens_e", "second premise does not conclude a tensor");
  const Context& octx = open.sequent.context;
  if (octx.size() < 2 || !(octx[octx.size() - 2] == tens.left()) ||
      !(octx.back() == tens.right()))
    builder_fail("nd_tens_e", "first premise context does not end with the components");
  Sequent s(concat(drop_last(octx, 2), tensored.sequent.context), open.sequent.conclusion);
  return NDProof{NDRule::TensE, std::move(s), {std::move(open), std::move(tensored)}};
}

NDProof nd_and_i(NDProof l, NDProof r) {
  if (!(l.sequent.context == r.sequent.context))
    builder_fail("nd_and_i", "premise contexts differ");
  Sequent s(l.sequent.context, Formula::conj(l.sequent.conclusion, r.sequent.conclusion));
  return NDProof{NDRule::AndI, std::move(s), {std::move(l), std::move(r)}};
}

NDProof nd_and_e1(NDProof p) {
  if (p.sequent.conclusion.kind() != Formula::Kind::And)
    builder_fail("nd_and_e1", "premise does not conclude a conjunction");
  Sequent s(p.sequent.context, p.sequent.conclusion.left());
  return NDProof{NDRule::AndE1, std::move(s), {std::move(p)}};
}

NDProof nd_and_e2(NDProof p) {
  if (p.sequent.conclusion.kind() != Formula::Kind::And)
    builder_fail("nd_and_e2", "premise does not conclude a conjunction");
  Sequent s(p.sequent.context, p.sequent.conclusion.right());
  return NDProof{NDRule::AndE2, std::move(s), {std::move(p)}};
}

NDProof nd_or_i1(NDProof p, Formula right) {
  Sequent s(p.sequent.context, Formula::disj(p.sequent.conclusion, std::move(right)));
  return NDProof{NDRule::OrI1, std::move(s), {std::move(p)}};
}

NDProof nd_or_i2(NDProof p, Formula left) {
  Sequent s(p.sequent.context, Formula::disj(std::move(left), p.sequent.conclusion));
  return NDProof{NDRule::OrI2, std::move(s), {std::move(p)}};
}

NDProof nd_or_e(NDProof disjunction, NDProof left_case, NDProof right_case) {
  const Formula& d = disjunction.sequent.conclusion;
  if (d.kind() != Formula::Kind::Or)
    builder_fail("nd_or_e", "first premise does not conclude a disjunction");
  const Context& lctx = left_case.sequent.context;
  const Context& rctx = right_case.sequent.context;
  if (lctx.empty() || !(lctx.back() == d.left()))
    builder_fail("nd_or_e", "left case context does not end with the left disjunct");
  if (rctx.empty() || !(rctx.back() == d.right()))
    builder_fail("nd_or_e", "right case context does not end with the right disjunct");
  if (!(drop_last(lctx, 1) == drop_last(rctx, 1)))
    builder_fail("nd_or_e", "case contexts differ");
  if (!(left_case.sequent.conclusion == right_case.sequent.conclusion))
    builder_fail("nd_or_e", "case conclusions differ");
  Sequent s(concat(disjunction.sequent.context, drop_last(lctx, 1)),
            left_case.sequent.conclusion);
  return NDProof{NDRule::OrE, std::move(s),
                 {std::move(disjunction), std::move(left_case), std::move(right_case)}};
}

NDProof nd_div(NDProof p) {
  const Context& ctx = p.sequent.context;
  if (ctx.size() < 2 || ctx.back().kind() != Formula::Kind::Implies ||
      !(ctx.back().left() == ctx[ctx.size() - 2]))
    builder_fail("nd_div", "premise context does not end with phi, phi -> psi");
  const Formula phi = ctx[ctx.size() - 2];
  const Formula psi = ctx.back().right();
  Sequent s(concat(drop_last(ctx, 2), {psi, Formula::implies(psi, phi)}),
            p.sequent.conclusion);
  return NDProof{NDRule::Div, std::move(s), {std::move(p)}};
}

NDProof nd_bot_e(NDProof p, Formula f) {
  if (p.sequent.conclusion.kind() != Formula::Kind::Bottom)
    builder_fail("nd_bot_e", "premise does not conclude bot");
  Sequent s(p.sequent.context, std::move(f));
  return NDProof{NDRule::BotE, std::move(s), {std::move(p)}};
}

NDProof nd_prelin(std::vector<Formula> context, Formula phi, Formula psi) {
  Formula concl = Formula::disj(Formula::implies(phi, psi), Formula::implies(psi, phi));
  Sequent s(std::move(context), std::move(concl));
  return NDProof{NDRule::Prelin, std::move(s), {}};
}

NDProof curry(NDProof p) {
  check_nd(p);
  if (p.sequent.context.empty())
    builder_fail("curry", "proof concludes a sequent with an empty context");
  return nd_imp_i(std::move(p));
}

NDProof uncurry(NDProof p) {
  check_nd(p);
  if (p.sequent.conclusion.kind() != Formula::Kind::Implies)
    builder_fail("uncurry", "proof does not conclude an implication");
  Formula antecedent = p.sequent.conclusion.left();
  return nd_imp_e(std::move(p), nd_ax(std::move(antecedent)));
}

NDProof tensor_fold(NDProof p) {
  check_nd(p);
  const Context& ctx = p.sequent.context;
  if (ctx.size() < 2)
    builder_fail("tensor_fold", "proof context has fewer than two formulas");
  Formula pair = Formula::tensor(ctx[ctx.size() - 2], ctx.back());
  return nd_tens_e(std::move(p), nd_ax(std::move(pair)));
}

NDProof tensor_unfold(NDProof p) {
  check_nd(p);
  const Context& ctx = p.sequent.context;
  if (ctx.empty() || ctx.back().kind() != Formula::Kind::Tensor)
    builder_fail("tensor_unfold", "proof context does not end with a tensor");
  Formula a = ctx.back().left();
  Formula b = ctx.back().right();
  NDProof curried = nd_imp_i(std::move(p));
  NDProof pair = nd_tens_i(nd_ax(std::move(a)), nd_ax(std::move(b)));
  return nd_imp_e(std::move(curried), std::move(pair));
}

NDProof axiom_derivation(AxiomId id, const Formula& phi, const Formula& psi,
                         const Formula& chi) {
  const Formula imp_pp = Formula::implies(phi, psi);
  switch (id) {
    case AxiomId::A1:
      return nd_imp_i(nd_ax(phi));

    case AxiomId::A2: {
      // [psi->chi, phi->psi, phi] |- chi, exchanged and closed.
      NDProof mp1 = nd_imp_e(nd_ax(imp_pp), nd_ax(phi));
      NDProof mp2 = nd_imp_e(nd_ax(Formula::implies(psi, chi)), std::move(mp1));
      NDProof arranged = nd_exchange(std::move(mp2), 0);
      return nd_imp_i(nd_imp_i(nd_imp_i(std::move(arranged))));
    }

    case AxiomId::A3: {
      NDProof swapped = nd_exchange(nd_tens_i(nd_ax(psi), nd_ax(phi)), 0);
      return nd_imp_i(tensor_fold(std::move(swapped)));
    }

    case AxiomId::A4: {
      NDProof arranged = nd_exchange(nd_weaken(nd_ax(psi), phi), 0);
      return nd_imp_i(tensor_fold(std::move(arranged)));
    }

    case AxiomId::A5: {
      const Formula curried = Formula::implies(phi, Formula::implies(psi, chi));
      NDProof mp1 = nd_imp_e(nd_ax(curried), nd_ax(phi));
      NDProof mp2 = nd_imp_e(std::move(mp1), nd_ax(psi));
      return nd_imp_i(nd_imp_i(tensor_fold(std::move(mp2))));
    }

    case AxiomId::A6: {
      const Formula uncurried = Formula::implies(Formula::tensor(phi, psi), chi);
      NDProof pair = nd_tens_i(nd_ax(phi), nd_ax(psi));
      NDProof mp = nd_imp_e(nd_ax(uncurried), std::move(pair));
      return nd_imp_i(nd_imp_i(nd_imp_i(std::move(mp))));
    }

    case AxiomId::A7: {
      // [phi, phi->psi] proves each conjunct, then fold the context.
      NDProof first = nd_weaken(nd_ax(phi), imp_pp);
      NDProof second = nd_exchange(nd_imp_e(nd_ax(imp_pp), nd_ax(phi)), 0);
      NDProof both = nd_and_i(std::move(first), std::move(second));
      return nd_imp_i(tensor_fold(std::move(both)));
    }

    case AxiomId::A8: {
      // Case split on (phi -> psi) | (psi -> phi); the right case rests on
      // the divisibility rule.
      const Formula meet = Formula::conj(phi, psi);
      NDProof left_case =
          nd_tens_i(nd_and_e1(nd_ax(meet)), nd_ax(imp_pp));
      NDProof from_phi = nd_tens_i(nd_ax(phi), nd_ax(imp_pp));
      NDProof from_psi = nd_div(std::move(from_phi));
      NDProof closed = nd_imp_i(nd_imp_i(std::move(from_psi)));
      NDProof with_meet = nd_imp_e(std::move(closed), nd_and_e2(nd_ax(meet)));
      NDProof right_case =
          nd_imp_e(std::move(with_meet), nd_ax(Formula::implies(psi, phi)));
      NDProof cases = nd_or_e(nd_prelin({}, phi, psi), std::move(left_case),
                              std::move(right_case));
      return nd_imp_i(std::move(cases));
    }

    case AxiomId::A9: {
      const Formula meet = Formula::conj(phi, psi);
      NDProof both = nd_and_i(nd_and_e2(nd_ax(meet)), nd_and_e1(nd_ax(meet)));
      return nd_imp_i(std::move(both));
    }

    case AxiomId::A10:
      return nd_imp_i(nd_or_i1(nd_ax(phi), psi));

    case AxiomId::A11:
      return nd_imp_i(nd_or_i2(nd_ax(psi), phi));

    case AxiomId::A12: {
      const Formula branches =
          Formula::conj(imp_pp, Formula::implies(chi, psi));
      NDProof left_case = nd_imp_e(nd_and_e1(nd_ax(branches)), nd_ax(phi));
      NDProof right_case = nd_imp_e(nd_and_e2(nd_ax(branches)), nd_ax(chi));
      NDProof cases = nd_or_e(nd_ax(Formula::disj(phi, chi)), std::move(left_case),
                              std::move(right_case));
      NDProof arranged = nd_exchange(std::move(cases), 0);
      return nd_imp_i(nd_imp_i(std::move(arranged)));
    }

    case AxiomId::A13:
      return nd_imp_i(nd_bot_e(nd_ax(Formula::bottom()), phi));

    case AxiomId::A14:
      return nd_prelin({}, phi, psi);
  }
  throw std::logic_error("axiom_derivation: unreachable");
}

}  // namespace blw
