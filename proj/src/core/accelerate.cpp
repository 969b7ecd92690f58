#include "core/accelerate.hpp"

#include "core/errors.hpp"

namespace tpn {

namespace {

// Prepends the rear symbol incremented by one, then saturates.
SimpleExpr unfold_saturate(const SatCtx& ctx, const SimpleExpr& e) {
  SimpleExpr next;
  next.atoms.push_back(
      Atom{symbol_plus_one(ctx.rctx, e.atoms.back().sym), false});
  next.atoms.insert(next.atoms.end(), e.atoms.begin(), e.atoms.end());
  SimpleExpr sat = saturate_expr(ctx, next);
  for (std::size_t i = 0; i < next.atoms.size(); ++i)
    if (!next.atoms[i].sym.subset_of(sat.atoms[i].sym))
      throw InternalError("saturation lost a symbol entry");
  return sat;
}

void check_pointwise(const SimpleExpr& prev, const SimpleExpr& cur) {
  for (std::size_t i = 0; i < prev.atoms.size(); ++i)
    if (!prev.atoms[i].sym.subset_of(cur.atoms[i].sym))
      throw InternalError("accelerate lost pointwise growth");
}

}  // namespace

AccelerateResult accelerate(const SatCtx& ctx, const SimpleExpr& s0) {
  if (s0.atoms.size() != 2 || s0.atoms[0].starred || !s0.atoms[1].starred)
    throw ShapeError("accelerate expects x1 x0* shaped input");

  AccelerateResult res;
  res.s1 = saturate_expr(ctx, s0);
  const SimpleExpr s2 = unfold_saturate(ctx, res.s1);   // length 3
  SimpleExpr cur = unfold_saturate(ctx, s2);            // S3, length 4

  const std::uint32_t bound = 4 * ctx.rctx.place_count * (ctx.rctx.cmax + 1);
  std::uint32_t iterations = 0;
  for (;;) {
    const SimpleExpr grown = unfold_saturate(ctx, cur);  // length 5
    SimpleExpr next;
    next.atoms.push_back(grown.atoms[0]);
    next.atoms.push_back(Atom{grown.atoms[1].sym, true});
    next.atoms.push_back(grown.atoms[3]);
    next.atoms.push_back(grown.atoms[4]);
    ++iterations;
    check_pointwise(cur, next);
    if (next == cur) break;
    cur = std::move(next);
    if (iterations > bound)
      throw InternalError("accelerate exceeded its termination bound");
  }

  res.sl = cur;
  res.r.atoms.push_back(
      Atom{symbol_plus_one(ctx.rctx, cur.atoms[2].sym), false});
  res.r.atoms.push_back(Atom{cur.atoms[1].sym, true});
  res.iterations = iterations;
  return res;
}

}  // namespace tpn
