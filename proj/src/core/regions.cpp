#include "core/regions.hpp"

#include <algorithm>
#include <bit>

#include "core/errors.hpp"

namespace tpn {

RegionCtx region_ctx(const Net& net) {
  return RegionCtx{static_cast<std::uint32_t>(net.places.size()), cmax(net)};
}

bool Symbol::test(const RegionCtx& ctx, PlaceIdx p, std::uint32_t age) const {
  const std::size_t i = ctx.bit_index(p, age);
  return (bits_[i / 64] >> (i % 64)) & 1u;
}

void Symbol::set(const RegionCtx& ctx, PlaceIdx p, std::uint32_t age) {
  const std::size_t i = ctx.bit_index(p, age);
  bits_[i / 64] |= std::uint64_t{1} << (i % 64);
}

bool Symbol::is_empty() const {
  for (auto w : bits_)
    if (w) return false;
  return true;
}

bool Symbol::subset_of(const Symbol& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

void Symbol::union_in(const Symbol& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
}

Symbol Symbol::union_with(const Symbol& other) const {
  Symbol out = *this;
  out.union_in(other);
  return out;
}

std::size_t Symbol::popcount() const {
  std::size_t n = 0;
  for (auto w : bits_) n += std::popcount(w);
  return n;
}

std::vector<std::pair<PlaceIdx, std::uint32_t>> Symbol::entries(
    const RegionCtx& ctx) const {
  std::vector<std::pair<PlaceIdx, std::uint32_t>> out;
  for (PlaceIdx p = 0; p < ctx.place_count; ++p)
    for (std::uint32_t a = 0; a < ctx.age_count(); ++a)
      if (test(ctx, p, a)) out.emplace_back(p, a);
  return out;
}

Symbol symbol_plus_one(const RegionCtx& ctx, const Symbol& x) {
  Symbol out(ctx);
  for (const auto& [p, a] : x.entries(ctx))
    out.set(ctx, p, std::min(ctx.cmax + 1, a + 1));
  return out;
}

FractionSet FractionSet::checked(std::vector<Rat> values) {
  if (values.empty() || values.front() != Rat(0))
    throw InvalidArgument("fraction set must start at 0");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1]))
      throw InvalidArgument("fraction set must be strictly ascending");
  }
  if (values.back() >= Rat(1))
    throw InvalidArgument("fractions must lie in [0,1)");
  return FractionSet{std::move(values)};
}

FractionSet fraction_set_of(const Marking& m) {
  std::vector<Rat> vals{Rat(0)};
  for (const auto& tok : m.tokens()) vals.push_back(frac_of(tok.age));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return FractionSet::checked(std::move(vals));
}

Word abstract_marking(const RegionCtx& ctx, const Marking& m,
                      const FractionSet& s) {
  Word w;
  w.syms.assign(s.values.size(), Symbol(ctx));
  for (const auto& tok : m.tokens()) {
    const Rat f = frac_of(tok.age);
    auto it = std::lower_bound(s.values.begin(), s.values.end(), f);
    if (it == s.values.end() || *it != f)
      throw InvalidArgument("marking has a fractional value outside S");
    const auto idx = static_cast<std::size_t>(it - s.values.begin());
    const auto age = static_cast<std::uint32_t>(
        std::min<std::int64_t>(ctx.cmax + 1, floor_of(tok.age)));
    w.syms[idx].set(ctx, tok.place, age);
  }
  return w;
}

Word shortest_abstraction(const RegionCtx& ctx, const Marking& m) {
  return abstract_marking(ctx, m, fraction_set_of(m));
}

Word normalize_word(const Word& w) {
  Word out;
  out.syms.push_back(w.syms.front());
  for (std::size_t i = 1; i < w.syms.size(); ++i)
    if (!w.syms[i].is_empty()) out.syms.push_back(w.syms[i]);
  return out;
}

Word rotate(const RegionCtx& ctx, const Word& w) {
  Word out;
  out.syms.push_back(symbol_plus_one(ctx, w.syms.back()));
  out.syms.insert(out.syms.end(), w.syms.begin(), w.syms.end() - 1);
  return out;
}

SimpleExpr rotate(const RegionCtx& ctx, const SimpleExpr& e) {
  if (e.atoms.back().starred)
    throw ShapeError("rotate requires an unstarred rightmost atom");
  SimpleExpr out;
  out.atoms.push_back(Atom{symbol_plus_one(ctx, e.atoms.back().sym), false});
  out.atoms.insert(out.atoms.end(), e.atoms.begin(), e.atoms.end() - 1);
  return out;
}

Word prepend_empty(const RegionCtx& ctx, const Word& w) {
  Word out;
  out.syms.push_back(Symbol(ctx));
  out.syms.insert(out.syms.end(), w.syms.begin(), w.syms.end());
  return out;
}

SimpleExpr prepend_empty(const RegionCtx& ctx, const SimpleExpr& e) {
  SimpleExpr out;
  out.atoms.push_back(Atom{Symbol(ctx), false});
  out.atoms.insert(out.atoms.end(), e.atoms.begin(), e.atoms.end());
  return out;
}

SimpleExpr star_free_expr(const Word& w) {
  SimpleExpr out;
  for (const auto& s : w.syms) out.atoms.push_back(Atom{s, false});
  return out;
}

bool word_covered_by_expr(const Word& w, const SimpleExpr& e) {
  const std::size_t n = w.syms.size();
  const std::size_t k = e.atoms.size();
  // match[i][j]: w[i..] embeds into E[j..]; ∅-padding allowed after
  // position 0 and at the end.
  std::vector<std::vector<char>> match(n + 1, std::vector<char>(k + 1, 0));
  for (std::size_t ii = n + 1; ii-- > 0;) {
    for (std::size_t jj = k + 1; jj-- > 0;) {
      const std::size_t i = ii, j = jj;
      if (j == k) {
        match[i][j] = (i == n);
        continue;
      }
      const Atom& a = e.atoms[j];
      bool ok = false;
      if (a.starred) {
        ok = match[i][j + 1] ||
             (i < n && w.syms[i].subset_of(a.sym) && match[i + 1][j]);
      } else {
        if (i < n && w.syms[i].subset_of(a.sym) && match[i + 1][j + 1])
          ok = true;
        // Padding slot: only after the front position.
        if (!ok && i > 0 && match[i][j + 1]) ok = true;
      }
      match[i][j] = ok;
    }
  }
  return match[0][0];
}

bool marking_in_denotation(const RegionCtx& ctx, const Marking& m,
                           const SimpleExpr& e) {
  return word_covered_by_expr(normalize_word(shortest_abstraction(ctx, m)), e);
}

std::string to_text(const RegionCtx& ctx, const Symbol& sym,
                    const std::vector<std::string>& places) {
  std::string out = "{";
  bool first = true;
  for (const auto& [p, a] : sym.entries(ctx)) {
    if (!first) out += ",";
    first = false;
    out += places.at(p) + ":" + std::to_string(a);
  }
  out += "}";
  return out;
}

std::string to_text(const RegionCtx& ctx, const Word& w,
                    const std::vector<std::string>& places) {
  std::string out;
  for (std::size_t i = 0; i < w.syms.size(); ++i) {
    if (i) out += " ";
    out += to_text(ctx, w.syms[i], places);
  }
  return out;
}

std::string to_text(const RegionCtx& ctx, const SimpleExpr& e,
                    const std::vector<std::string>& places) {
  std::string out;
  for (std::size_t i = 0; i < e.atoms.size(); ++i) {
    if (i) out += " ";
    out += to_text(ctx, e.atoms[i].sym, places);
    if (e.atoms[i].starred) out += "*";
  }
  return out;
}

}  // namespace tpn
