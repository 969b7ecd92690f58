#include "core/coverset.hpp"

#include <set>

#include "core/errors.hpp"

namespace tpn {

CoverQuery make_query(Net net, std::string_view initial_place,
                      std::string_view target_transition) {
  net.canonicalize_and_validate();
  if (!is_nonconsuming(net))
    throw SemanticError("cover queries require a non-consuming net");
  const auto p = net.place_index(initial_place);
  if (!p)
    throw SemanticError("unknown initial place: " + std::string(initial_place));
  const auto t = net.transition_index(target_transition);
  if (!t)
    throw SemanticError("unknown target transition: " +
                        std::string(target_transition));
  return CoverQuery{std::move(net), *p, *t};
}

BigNat expression_count_bound(std::uint32_t m, std::uint32_t places,
                              std::uint32_t cmax) {
  const std::uint64_t exponent =
      static_cast<std::uint64_t>(places) * (cmax + 2) * m + m;
  return BigNat(1) << exponent;
}

namespace {

SimpleExpr initial_expr(const RegionCtx& rctx, PlaceIdx p) {
  SimpleExpr s0;
  Symbol front(rctx);
  front.set(rctx, p, 0);
  s0.atoms.push_back(Atom{front, false});
  s0.atoms.push_back(Atom{Symbol(rctx), true});
  return s0;
}

bool expr_enables(const SatCtx& ctx, const SimpleExpr& e, std::size_t target) {
  Symbol beta(ctx.rctx);
  for (std::size_t i = 1; i < e.atoms.size(); ++i)
    beta.union_in(e.atoms[i].sym);
  return enables(ctx, e.atoms.front().sym, beta, target);
}

// Shared round loop. With a target, stops at the first enabling expression.
CoverEvidence run_rounds(const CoverQuery& q, bool check_target) {
  const SatCtx ctx = compile(q.net);
  const BigNat round_cap =
      expression_count_bound(2, ctx.rctx.place_count, ctx.rctx.cmax);

  CoverEvidence ev;
  std::set<SimpleExpr> visited;
  SimpleExpr cur = initial_expr(ctx.rctx, q.initial_place);
  visited.insert(cur);

  for (;;) {
    if (BigNat(ev.set.rounds) >= round_cap)
      throw InternalError("cover-set loop exceeded the B(2) round cap");
    const AccelerateResult acc = accelerate(ctx, cur);
    ++ev.set.rounds;
    for (const SimpleExpr* e : {&acc.s1, &acc.sl, &acc.r}) {
      ev.set.expressions.push_back(*e);
      if (check_target && expr_enables(ctx, *e, q.target)) {
        ev.covered = true;
        ev.witness = *e;
        ev.witness_round = ev.set.rounds;
        return ev;
      }
    }
    if (BigNat(ev.set.expressions.size()) > 3 * round_cap)
      throw InternalError("cover set exceeded the 3·B(2) expression bound");
    if (visited.count(acc.r)) break;
    visited.insert(acc.r);
    cur = acc.r;
  }
  return ev;
}

}  // namespace

CoverSet compute_coverset(const CoverQuery& q) {
  return run_rounds(q, false).set;
}

CoverEvidence exists_cover(const CoverQuery& q) { return run_rounds(q, true); }

StreamingResult exists_cover_streaming(const CoverQuery& q,
                                       const BigNat& budget, bool force) {
  const SatCtx ctx = compile(q.net);
  const BigNat cap =
      3 * expression_count_bound(2, ctx.rctx.place_count, ctx.rctx.cmax);
  if (!force && cap > budget)
    throw BudgetError("streaming cap 3·B(2) = " + cap.str() +
                      " exceeds budget " + budget.str() +
                      "; pass force to run anyway");

  StreamingResult res;
  SimpleExpr cur = initial_expr(ctx.rctx, q.initial_place);
  BigNat index = 0;
  for (;;) {
    const AccelerateResult acc = accelerate(ctx, cur);
    ++res.rounds_run;
    for (const SimpleExpr* e : {&acc.s1, &acc.sl, &acc.r}) {
      if (expr_enables(ctx, *e, q.target)) {
        res.covered = true;
        res.witness = *e;
        return res;
      }
    }
    index += 3;
    if (index >= cap) return res;
    cur = acc.r;
  }
}

}  // namespace tpn
