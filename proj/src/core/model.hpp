#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/rational.hpp"

namespace tpn {

using PlaceIdx = std::uint32_t;
using VarIdx = std::uint32_t;

// Interval with endpoints in N ∪ {∞}. hi == nullopt means unbounded above,
// in which case hi_open is canonically false. Degenerate intervals
// (lo > hi, or lo == hi with an open end) are rejected by checked().
struct Interval {
  std::uint32_t lo = 0;
  bool lo_open = false;
  std::optional<std::uint32_t> hi;
  bool hi_open = false;

  static Interval checked(std::uint32_t lo, bool lo_open,
                          std::optional<std::uint32_t> hi, bool hi_open);

  bool contains(const Rat& v) const;
  bool operator==(const Interval&) const = default;
};

struct PreArc {
  PlaceIdx place = 0;
  VarIdx var = 0;
  std::uint32_t mult = 1;
  bool operator==(const PreArc&) const = default;
};

// var == nullopt produces a fresh token of age 0.
struct PostArc {
  PlaceIdx place = 0;
  std::optional<VarIdx> var;
  std::uint32_t mult = 1;
  bool operator==(const PostArc&) const = default;
};

struct Transition {
  std::string id;
  std::vector<std::pair<VarIdx, Interval>> guard;  // sorted by variable
  std::vector<PreArc> pre;                         // sorted by (place, var)
  std::vector<PostArc> post;                       // sorted by (place, var)

  const Interval* guard_for(VarIdx v) const;
  // Distinct variables appearing in pre, ascending.
  std::vector<VarIdx> vars() const;
  bool operator==(const Transition&) const = default;
};

struct Net {
  std::vector<std::string> places;
  std::vector<std::string> variables;
  std::vector<Transition> transitions;

  std::optional<PlaceIdx> place_index(std::string_view name) const;
  std::optional<VarIdx> variable_index(std::string_view name) const;
  std::optional<std::size_t> transition_index(std::string_view id) const;

  // Sorts arcs/guards into canonical order and checks the model rules;
  // throws SemanticError on violation.
  void canonicalize_and_validate();

  bool operator==(const Net&) const = default;
};

struct Token {
  PlaceIdx place = 0;
  Rat age;
  std::uint32_t mult = 1;
  bool operator==(const Token&) const = default;
};

// Finite multiset of (place, age) with explicit multiplicities,
// kept sorted by (place, age) with positive merged counts.
class Marking {
 public:
  Marking() = default;

  void add(PlaceIdx place, const Rat& age, std::uint32_t mult = 1);
  const std::vector<Token>& tokens() const { return toks_; }
  std::uint32_t count(PlaceIdx place, const Rat& age) const;
  std::size_t size() const;  // total token count
  bool empty() const { return toks_.empty(); }

  bool leq(const Marking& other) const;  // multiset ≤
  Marking plus(const Marking& other) const;
  // Requires other ≤ *this.
  Marking minus(const Marking& other) const;

  bool operator==(const Marking&) const = default;
  bool operator<(const Marking& other) const { return toks_ < other.toks_; }

 private:
  std::vector<Token> toks_;
};

inline bool operator<(const Token& a, const Token& b) {
  if (a.place != b.place) return a.place < b.place;
  if (a.age != b.age) return a.age < b.age;
  return a.mult < b.mult;
}

using Valuation = std::map<VarIdx, Rat>;

// Largest finite guard endpoint; 0 if there is none.
std::uint32_t cmax(const Net& net);

// Canonical witness search: candidate ages are the distinct ages present in
// M in ascending order, variables in ascending index order; returns the
// lexicographically first valuation that satisfies the guard with
// π(Pre(t)) ≤ M, or nullopt.
std::optional<Valuation> enabled_concrete(const Marking& m, const Transition& t);

Marking pre_marking(const Transition& t, const Valuation& pi);
Marking post_marking(const Transition& t, const Valuation& pi);

// M ⊖ π(Pre(t)) ⊕ π(Post(t)); throws InvalidArgument if π does not satisfy
// the guard or π(Pre(t)) ≰ M.
Marking fire(const Marking& m, const Transition& t, const Valuation& pi);

Marking elapse(const Marking& m, const Rat& d);

// Pre(t)(p,x) ≤ 1 everywhere and Pre(t) ≤ Post(t) for every transition.
bool is_nonconsuming(const Net& net);

}  // namespace tpn
