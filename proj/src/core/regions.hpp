#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace tpn {

// Shared dimensions of the region alphabet: symbols are subsets of
// P × [0..cmax+1], stored as bitsets in place-major order.
struct RegionCtx {
  std::uint32_t place_count = 0;
  std::uint32_t cmax = 0;

  std::uint32_t age_count() const { return cmax + 2; }
  std::size_t bit_count() const {
    return static_cast<std::size_t>(place_count) * age_count();
  }
  std::size_t word_count() const { return (bit_count() + 63) / 64; }
  std::size_t bit_index(PlaceIdx p, std::uint32_t age) const {
    return static_cast<std::size_t>(p) * age_count() + age;
  }
  bool operator==(const RegionCtx&) const = default;
};

RegionCtx region_ctx(const Net& net);

class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(const RegionCtx& ctx) : bits_(ctx.word_count(), 0) {}

  bool test(const RegionCtx& ctx, PlaceIdx p, std::uint32_t age) const;
  void set(const RegionCtx& ctx, PlaceIdx p, std::uint32_t age);
  bool is_empty() const;
  bool subset_of(const Symbol& other) const;
  void union_in(const Symbol& other);
  Symbol union_with(const Symbol& other) const;
  std::size_t popcount() const;
  // (place, age) members, place-major ascending.
  std::vector<std::pair<PlaceIdx, std::uint32_t>> entries(
      const RegionCtx& ctx) const;

  bool operator==(const Symbol&) const = default;
  bool operator<(const Symbol& o) const { return bits_ < o.bits_; }

 private:
  std::vector<std::uint64_t> bits_;
};

// Ages incremented by one, capped at cmax+1; collisions merge.
Symbol symbol_plus_one(const RegionCtx& ctx, const Symbol& x);

// Nonempty sequence of symbols; position 0 is the zero-fraction class.
struct Word {
  std::vector<Symbol> syms;
  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const { return syms < o.syms; }
};

struct Atom {
  Symbol sym;
  bool starred = false;
  bool operator==(const Atom&) const = default;
};

struct SimpleExpr {
  std::vector<Atom> atoms;
  bool operator==(const SimpleExpr&) const = default;
  bool operator<(const SimpleExpr& o) const {
    auto key = [](const Atom& a) { return std::pair(a.sym, a.starred); };
    return std::lexicographical_compare(
        atoms.begin(), atoms.end(), o.atoms.begin(), o.atoms.end(),
        [&](const Atom& a, const Atom& b) { return key(a) < key(b); });
  }
};

// Finite ascending fractions in [0,1) starting at 0.
struct FractionSet {
  std::vector<Rat> values;
  static FractionSet checked(std::vector<Rat> values);
};

FractionSet fraction_set_of(const Marking& m);

// Word of length |S|: symbol i holds (p, min(cmax+1, ⌊age⌋)) for the tokens
// whose fractional part equals the i-th fraction. Throws InvalidArgument
// if some fraction of M is missing from S.
Word abstract_marking(const RegionCtx& ctx, const Marking& m,
                      const FractionSet& s);

// abstract_marking with S = {0} ∪ frac(M).
Word shortest_abstraction(const RegionCtx& ctx, const Marking& m);

// Drops empty symbols at positions > 0; the front symbol always stays.
Word normalize_word(const Word& w);

// α·z ↦ (z+1)·α. The rightmost atom must be unstarred (ShapeError).
Word rotate(const RegionCtx& ctx, const Word& w);
SimpleExpr rotate(const RegionCtx& ctx, const SimpleExpr& e);

Word prepend_empty(const RegionCtx& ctx, const Word& w);
SimpleExpr prepend_empty(const RegionCtx& ctx, const SimpleExpr& e);

SimpleExpr star_free_expr(const Word& w);

// Membership of ⟦w⟧ in ⟦E⟧ for a normalized word w: some u ∈ L(E) admits an
// ∅-padding of w (after position 0 and at the end) that is pointwise ⊆ u.
bool word_covered_by_expr(const Word& w, const SimpleExpr& e);

bool marking_in_denotation(const RegionCtx& ctx, const Marking& m,
                           const SimpleExpr& e);

// Textual syntax: "{p:0,q:1}", "{}" for the empty symbol, trailing "*" on
// starred atoms, atoms space-separated. Places in declaration order, ages
// ascending.
std::string to_text(const RegionCtx& ctx, const Symbol& sym,
                    const std::vector<std::string>& places);
std::string to_text(const RegionCtx& ctx, const Word& w,
                    const std::vector<std::string>& places);
std::string to_text(const RegionCtx& ctx, const SimpleExpr& e,
                    const std::vector<std::string>& places);

}  // namespace tpn
