#include "core/saturation.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace tpn {

bool guard_admits(const AbstractAge& a, const Interval& iv) {
  const auto base = static_cast<std::int64_t>(a.int_age);
  const Rat rep = a.frac == FracClass::Zero ? Rat(base) : Rat(2 * base + 1, 2);
  return iv.contains(rep);
}

SatCtx compile(const Net& net) {
  if (!is_nonconsuming(net))
    throw InvalidArgument("symbolic operators require a non-consuming net");
  SatCtx ctx;
  ctx.rctx = region_ctx(net);
  for (const auto& t : net.transitions) {
    SatCtx::Trans ct;
    ct.id = t.id;
    for (const VarIdx v : t.vars()) {
      SatCtx::VarSlot slot;
      slot.var = v;
      slot.guard = *t.guard_for(v);
      for (const auto& arc : t.pre)
        if (arc.var == v) slot.pre_places.push_back(arc.place);
      for (const auto& arc : t.post)
        if (arc.var && *arc.var == v) slot.post_places.push_back(arc.place);
      ct.vars.push_back(std::move(slot));
    }
    // Guard-only variables constrain nothing beyond nonemptiness, which
    // interval validation already guarantees.
    for (const auto& arc : t.post)
      if (!arc.var) ct.resets.push_back(arc.place);
    std::sort(ct.resets.begin(), ct.resets.end());
    ct.resets.erase(std::unique(ct.resets.begin(), ct.resets.end()),
                    ct.resets.end());
    ctx.transitions.push_back(std::move(ct));
  }
  return ctx;
}

namespace {

bool var_satisfiable(const SatCtx& ctx, const SatCtx::VarSlot& slot,
                     const Symbol& alpha, const Symbol& beta) {
  for (std::uint32_t c = 0; c < ctx.rctx.age_count(); ++c) {
    for (const FracClass f : {FracClass::Zero, FracClass::Positive}) {
      if (!guard_admits(AbstractAge{c, f}, slot.guard)) continue;
      const Symbol& home = f == FracClass::Zero ? alpha : beta;
      bool ok = true;
      for (const PlaceIdx p : slot.pre_places)
        if (!home.test(ctx.rctx, p, c)) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
  }
  return false;
}

bool others_satisfiable(const SatCtx& ctx, const SatCtx::Trans& t,
                        std::size_t skip, const Symbol& alpha,
                        const Symbol& beta) {
  for (std::size_t i = 0; i < t.vars.size(); ++i)
    if (i != skip && !var_satisfiable(ctx, t.vars[i], alpha, beta))
      return false;
  return true;
}

Symbol transfer_step(const SatCtx& ctx, const Symbol& alpha,
                     const Symbol& beta, const Symbol& x,
                     const SatCtx::Trans& t, FracClass klass,
                     bool with_resets) {
  if (!enables(ctx, alpha, beta, t)) return x;
  Symbol out = x;
  for (std::size_t vi = 0; vi < t.vars.size(); ++vi) {
    const auto& slot = t.vars[vi];
    if (slot.post_places.empty()) continue;
    if (!others_satisfiable(ctx, t, vi, alpha, beta)) continue;
    for (std::uint32_t c = 0; c < ctx.rctx.age_count(); ++c) {
      if (!guard_admits(AbstractAge{c, klass}, slot.guard)) continue;
      bool present = true;
      for (const PlaceIdx q : slot.pre_places)
        if (!x.test(ctx.rctx, q, c)) {
          present = false;
          break;
        }
      if (!present) continue;
      for (const PlaceIdx p : slot.post_places) out.set(ctx.rctx, p, c);
    }
  }
  if (with_resets)
    for (const PlaceIdx p : t.resets) out.set(ctx.rctx, p, 0);
  return out;
}

}  // namespace

bool enables(const SatCtx& ctx, const Symbol& alpha, const Symbol& beta,
             const SatCtx::Trans& t) {
  for (const auto& slot : t.vars)
    if (!var_satisfiable(ctx, slot, alpha, beta)) return false;
  return true;
}

bool enables(const SatCtx& ctx, const Symbol& alpha, const Symbol& beta,
             std::size_t transition) {
  return enables(ctx, alpha, beta, ctx.transitions.at(transition));
}

Symbol g_step(const SatCtx& ctx, const Symbol& alpha, const Symbol& beta,
              const Symbol& x, const SatCtx::Trans& t) {
  return transfer_step(ctx, alpha, beta, x, t, FracClass::Positive, false);
}

Symbol f_step(const SatCtx& ctx, const Symbol& alpha, const Symbol& beta,
              const Symbol& x, const SatCtx::Trans& t) {
  return transfer_step(ctx, alpha, beta, x, t, FracClass::Zero, true);
}

std::pair<Symbol, std::vector<Symbol>> fg_closure(const SatCtx& ctx,
                                                  Symbol alpha, Symbol beta,
                                                  Symbol front,
                                                  std::vector<Symbol> rest) {
  const std::size_t sweep_cap =
      (1 + rest.size()) * ctx.rctx.bit_count() + 2;
  std::size_t sweeps = 0;
  bool changed = true;
  while (changed) {
    if (++sweeps > sweep_cap)
      throw InternalError("fg_closure exceeded its sweep bound");
    changed = false;
    for (const auto& t : ctx.transitions) {
      Symbol nf = f_step(ctx, alpha, beta, front, t);
      if (!(nf == front)) {
        front = nf;
        alpha.union_in(front);
        changed = true;
      }
      for (auto& r : rest) {
        Symbol nr = g_step(ctx, alpha, beta, r, t);
        if (!(nr == r)) {
          r = nr;
          beta.union_in(r);
          changed = true;
        }
      }
    }
  }
  return {std::move(front), std::move(rest)};
}

SimpleExpr saturate_expr(const SatCtx& ctx, const SimpleExpr& e) {
  if (e.atoms.front().starred)
    throw ShapeError("saturation requires an unstarred front atom");
  Symbol alpha = e.atoms.front().sym;
  Symbol beta(ctx.rctx);
  std::vector<Symbol> rest;
  for (std::size_t i = 1; i < e.atoms.size(); ++i) {
    beta.union_in(e.atoms[i].sym);
    rest.push_back(e.atoms[i].sym);
  }
  auto [front, rest2] =
      fg_closure(ctx, std::move(alpha), std::move(beta), e.atoms.front().sym,
                 std::move(rest));
  SimpleExpr out = e;
  out.atoms.front().sym = std::move(front);
  for (std::size_t i = 1; i < out.atoms.size(); ++i)
    out.atoms[i].sym = std::move(rest2[i - 1]);
  return out;
}

Word saturate_word(const SatCtx& ctx, const Word& w) {
  SimpleExpr e = saturate_expr(ctx, star_free_expr(w));
  Word out;
  for (const auto& a : e.atoms) out.syms.push_back(a.sym);
  return out;
}

}  // namespace tpn
