#include "core/model.hpp"

#include <algorithm>
#include <set>

#include "core/errors.hpp"

namespace tpn {

Interval Interval::checked(std::uint32_t lo, bool lo_open,
                           std::optional<std::uint32_t> hi, bool hi_open) {
  if (hi) {
    if (*hi < lo) throw SemanticError("interval upper bound below lower bound");
    if (*hi == lo && (lo_open || hi_open))
      throw SemanticError("degenerate empty interval");
  } else {
    hi_open = false;
  }
  return Interval{lo, lo_open, hi, hi_open};
}

bool Interval::contains(const Rat& v) const {
  const Rat lo_r(static_cast<std::int64_t>(lo));
  if (lo_open ? !(v > lo_r) : !(v >= lo_r)) return false;
  if (!hi) return true;
  const Rat hi_r(static_cast<std::int64_t>(*hi));
  return hi_open ? v < hi_r : v <= hi_r;
}

const Interval* Transition::guard_for(VarIdx v) const {
  for (const auto& [var, iv] : guard)
    if (var == v) return &iv;
  return nullptr;
}

std::vector<VarIdx> Transition::vars() const {
  std::vector<VarIdx> out;
  for (const auto& arc : pre) out.push_back(arc.var);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<PlaceIdx> Net::place_index(std::string_view name) const {
  for (std::size_t i = 0; i < places.size(); ++i)
    if (places[i] == name) return static_cast<PlaceIdx>(i);
  return std::nullopt;
}

std::optional<VarIdx> Net::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return static_cast<VarIdx>(i);
  return std::nullopt;
}

std::optional<std::size_t> Net::transition_index(std::string_view id) const {
  for (std::size_t i = 0; i < transitions.size(); ++i)
    if (transitions[i].id == id) return i;
  return std::nullopt;
}

namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw SemanticError(std::string("empty ") + what + " name");
    if (!seen.insert(n).second)
      throw SemanticError(std::string("duplicate ") + what + " name: " + n);
  }
}

}  // namespace

void Net::canonicalize_and_validate() {
  check_unique(places, "place");
  check_unique(variables, "variable");
  std::set<std::string_view> tids;
  for (auto& t : transitions) {
    if (t.id.empty()) throw SemanticError("empty transition id");
    if (!tids.insert(t.id).second)
      throw SemanticError("duplicate transition id: " + t.id);

    std::sort(t.guard.begin(), t.guard.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < t.guard.size(); ++i)
      if (t.guard[i].first == t.guard[i - 1].first)
        throw SemanticError("transition " + t.id + ": duplicate guard entry");
    std::sort(t.pre.begin(), t.pre.end(), [](const PreArc& a, const PreArc& b) {
      return std::pair(a.place, a.var) < std::pair(b.place, b.var);
    });
    std::sort(t.post.begin(), t.post.end(),
              [](const PostArc& a, const PostArc& b) {
                return std::pair(a.place, a.var) < std::pair(b.place, b.var);
              });
    // Merge duplicate arcs on the same (place, variable) pair.
    {
      std::vector<PreArc> merged;
      for (const auto& arc : t.pre) {
        if (!merged.empty() && merged.back().place == arc.place &&
            merged.back().var == arc.var)
          merged.back().mult += arc.mult;
        else
          merged.push_back(arc);
      }
      t.pre = std::move(merged);
      std::vector<PostArc> pmerged;
      for (const auto& arc : t.post) {
        if (!pmerged.empty() && pmerged.back().place == arc.place &&
            pmerged.back().var == arc.var)
          pmerged.back().mult += arc.mult;
        else
          pmerged.push_back(arc);
      }
      t.post = std::move(pmerged);
    }

    for (const auto& arc : t.pre) {
      if (arc.place >= places.size() || arc.var >= variables.size())
        throw SemanticError("transition " + t.id + ": dangling pre reference");
      if (arc.mult == 0)
        throw SemanticError("transition " + t.id + ": zero pre multiplicity");
      if (!t.guard_for(arc.var))
        throw SemanticError("transition " + t.id + ": variable " +
                            variables[arc.var] + " in pre has no guard");
    }
    for (const auto& [var, iv] : t.guard) {
      if (var >= variables.size())
        throw SemanticError("transition " + t.id + ": dangling guard variable");
      Interval::checked(iv.lo, iv.lo_open, iv.hi, iv.hi_open);
    }
    const auto tvars = t.vars();
    for (const auto& arc : t.post) {
      if (arc.place >= places.size())
        throw SemanticError("transition " + t.id + ": dangling post place");
      if (arc.mult == 0)
        throw SemanticError("transition " + t.id + ": zero post multiplicity");
      if (arc.var) {
        if (*arc.var >= variables.size())
          throw SemanticError("transition " + t.id + ": dangling post variable");
        if (!std::binary_search(tvars.begin(), tvars.end(), *arc.var))
          throw SemanticError("transition " + t.id + ": post variable " +
                              variables[*arc.var] + " does not appear in pre");
      }
    }
  }
}

void Marking::add(PlaceIdx place, const Rat& age, std::uint32_t mult) {
  if (mult == 0) return;
  Token tok{place, age, mult};
  auto it = std::lower_bound(toks_.begin(), toks_.end(), tok,
                             [](const Token& a, const Token& b) {
                               return std::pair(a.place, a.age) <
                                      std::pair(b.place, b.age);
                             });
  if (it != toks_.end() && it->place == place && it->age == age)
    it->mult += mult;
  else
    toks_.insert(it, tok);
}

std::uint32_t Marking::count(PlaceIdx place, const Rat& age) const {
  for (const auto& t : toks_)
    if (t.place == place && t.age == age) return t.mult;
  return 0;
}

std::size_t Marking::size() const {
  std::size_t n = 0;
  for (const auto& t : toks_) n += t.mult;
  return n;
}

bool Marking::leq(const Marking& other) const {
  for (const auto& t : toks_)
    if (other.count(t.place, t.age) < t.mult) return false;
  return true;
}

Marking Marking::plus(const Marking& other) const {
  Marking out = *this;
  for (const auto& t : other.toks_) out.add(t.place, t.age, t.mult);
  return out;
}

Marking Marking::minus(const Marking& other) const {
  if (!other.leq(*this))
    throw InvalidArgument("multiset difference on non-dominating marking");
  Marking out;
  for (const auto& t : toks_) {
    const std::uint32_t sub = other.count(t.place, t.age);
    if (t.mult > sub) out.add(t.place, t.age, t.mult - sub);
  }
  return out;
}

std::uint32_t cmax(const Net& net) {
  std::uint32_t best = 0;
  for (const auto& t : net.transitions)
    for (const auto& [var, iv] : t.guard) {
      best = std::max(best, iv.lo);
      if (iv.hi) best = std::max(best, *iv.hi);
    }
  return best;
}

namespace {

bool assignment_feasible(const Marking& m, const Transition& t,
                         const Valuation& pi) {
  return pre_marking(t, pi).leq(m);
}

bool search_valuation(const Marking& m, const Transition& t,
                      const std::vector<VarIdx>& vars,
                      const std::vector<Rat>& candidates, std::size_t idx,
                      Valuation& pi) {
  if (idx == vars.size()) return assignment_feasible(m, t, pi);
  const VarIdx v = vars[idx];
  const Interval* iv = t.guard_for(v);
  for (const Rat& age : candidates) {
    if (iv && !iv->contains(age)) continue;
    // Per-variable necessary condition keeps the search small.
    bool ok = true;
    for (const auto& arc : t.pre)
      if (arc.var == v && m.count(arc.place, age) < arc.mult) {
        ok = false;
        break;
      }
    if (!ok) continue;
    pi[v] = age;
    if (search_valuation(m, t, vars, candidates, idx + 1, pi)) return true;
    pi.erase(v);
  }
  return false;
}

}  // namespace

std::optional<Valuation> enabled_concrete(const Marking& m,
                                          const Transition& t) {
  const auto vars = t.vars();
  if (vars.empty()) {
    Valuation empty;
    return assignment_feasible(m, t, empty) ? std::optional(empty)
                                            : std::nullopt;
  }
  std::vector<Rat> candidates;
  for (const auto& tok : m.tokens()) candidates.push_back(tok.age);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  Valuation pi;
  if (search_valuation(m, t, vars, candidates, 0, pi)) return pi;
  return std::nullopt;
}

Marking pre_marking(const Transition& t, const Valuation& pi) {
  Marking out;
  for (const auto& arc : t.pre) {
    auto it = pi.find(arc.var);
    if (it == pi.end())
      throw InvalidArgument("valuation misses variable of transition " + t.id);
    out.add(arc.place, it->second, arc.mult);
  }
  return out;
}

Marking post_marking(const Transition& t, const Valuation& pi) {
  Marking out;
  for (const auto& arc : t.post) {
    if (!arc.var) {
      out.add(arc.place, Rat(0), arc.mult);
      continue;
    }
    auto it = pi.find(*arc.var);
    if (it == pi.end())
      throw InvalidArgument("valuation misses variable of transition " + t.id);
    out.add(arc.place, it->second, arc.mult);
  }
  return out;
}

Marking fire(const Marking& m, const Transition& t, const Valuation& pi) {
  for (const auto& [var, iv] : t.guard) {
    auto it = pi.find(var);
    if (it != pi.end() && !iv.contains(it->second))
      throw InvalidArgument("valuation violates guard of transition " + t.id);
  }
  for (const VarIdx v : t.vars())
    if (!pi.count(v))
      throw InvalidArgument("valuation misses variable of transition " + t.id);
  const Marking pre = pre_marking(t, pi);
  if (!pre.leq(m))
    throw InvalidArgument("transition " + t.id + " not enabled by marking");
  return m.minus(pre).plus(post_marking(t, pi));
}

Marking elapse(const Marking& m, const Rat& d) {
  Marking out;
  for (const auto& t : m.tokens()) out.add(t.place, t.age + d, t.mult);
  return out;
}

bool is_nonconsuming(const Net& net) {
  for (const auto& t : net.transitions) {
    for (const auto& arc : t.pre) {
      if (arc.mult > 1) return false;
      std::uint32_t post_mult = 0;
      for (const auto& parc : t.post)
        if (parc.var && *parc.var == arc.var && parc.place == arc.place)
          post_mult += parc.mult;
      if (post_mult < arc.mult) return false;
    }
  }
  return true;
}

}  // namespace tpn
