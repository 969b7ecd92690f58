#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/model.hpp"
#include "core/regions.hpp"

namespace tpn {

enum class FracClass : std::uint8_t { Zero, Positive };

// One class of the region abstraction: integer age in [0, cmax+1] plus the
// zero/positive fractional flag. Its representative value is intAge for
// Zero and intAge + 1/2 for Positive.
struct AbstractAge {
  std::uint32_t int_age = 0;
  FracClass frac = FracClass::Zero;
};

// Exact membership of the representative value in the interval. Uniform on
// (cmax, ∞) since every finite endpoint is ≤ cmax.
bool guard_admits(const AbstractAge& a, const Interval& iv);

// Immutable per-net tables for the symbolic operators; safe to share
// across threads. Requires a non-consuming net.
struct SatCtx {
  struct VarSlot {
    VarIdx var = 0;
    Interval guard;
    std::vector<PlaceIdx> pre_places;   // places reading this variable
    std::vector<PlaceIdx> post_places;  // places receiving this variable
  };
  struct Trans {
    std::string id;
    std::vector<VarSlot> vars;      // ascending variable index
    std::vector<PlaceIdx> resets;   // places receiving fresh age-0 tokens
  };

  RegionCtx rctx;
  std::vector<Trans> transitions;
};

SatCtx compile(const Net& net);

// (α,β) enables t: every variable has an abstract age admitted by its guard
// whose pre-places all appear in α (zero fraction) or in β (positive).
bool enables(const SatCtx& ctx, const Symbol& alpha, const Symbol& beta,
             const SatCtx::Trans& t);
bool enables(const SatCtx& ctx, const Symbol& alpha, const Symbol& beta,
             std::size_t transition);

// One application of g_t: transfers of positive-fraction classes into x.
// A class c transfers through variable y when the guard admits (c, positive),
// all pre-places of y carry c inside x itself, and every other variable is
// satisfiable from (α,β).
Symbol g_step(const SatCtx& ctx, const Symbol& alpha, const Symbol& beta,
              const Symbol& x, const SatCtx::Trans& t);

// One application of f_t: zero-fraction transfers from x plus age-0 resets.
Symbol f_step(const SatCtx& ctx, const Symbol& alpha, const Symbol& beta,
              const Symbol& x, const SatCtx::Trans& t);

// Least fixpoint of all f_t/g_t over (front, rest), folding front growth
// into α and rest growth into β. Transitions are applied in declaration
// order; the result is order-independent.
std::pair<Symbol, std::vector<Symbol>> fg_closure(const SatCtx& ctx,
                                                  Symbol alpha, Symbol beta,
                                                  Symbol front,
                                                  std::vector<Symbol> rest);

// SAT(E): saturation by maximally firing discrete transitions. Star flags
// and length are preserved. The front atom must be unstarred (ShapeError).
SimpleExpr saturate_expr(const SatCtx& ctx, const SimpleExpr& e);

Word saturate_word(const SatCtx& ctx, const Word& w);

}  // namespace tpn
