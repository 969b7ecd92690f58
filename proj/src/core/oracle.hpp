#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/coverset.hpp"
#include "core/model.hpp"
#include "core/regions.hpp"

namespace tpn {

enum class Outcome { Found, ExhaustedNo, DepthBoundedUnknown };

enum class WordOp { Init, Saturate, PrependEmpty, Rotate };

struct WordStep {
  WordOp op = WordOp::Init;
  Word word;
};

struct ConcreteStep {
  std::string op;  // "init", "fire <id>", "elapse <d>"
  Marking marking;
};

struct OracleVerdict {
  Outcome outcome = Outcome::DepthBoundedUnknown;
  std::size_t states_explored = 0;
  std::vector<WordStep> trace;          // Found, word-level
  std::vector<ConcreteStep> concrete_trace;  // Found, concrete
};

// Explicit BFS over normalized words from ({(p,0)}). Successors: saturation,
// ∅-prepend (skipped on an already-∅ front) and rotation+normalization.
// Words covered by a previously expanded word are pruned. ExhaustedNo is
// reported only when the frontier empties without any budget truncation.
OracleVerdict word_bfs(const CoverQuery& q, std::size_t max_depth,
                       std::size_t max_states);

// Explicit BFS from m·{(p,0)} on an arbitrary (possibly consuming) net with
// exact rational ages. Discrete successors enumerate every enabled (t, π)
// over ages present in the marking; time successors advance by k/denominator
// for k = 1..denominator and are skipped once every token is older than
// cmax (elapsing such markings cannot change any guard evaluation).
OracleVerdict concrete_bfs(const Net& net, PlaceIdx initial,
                           std::size_t target, std::uint32_t m,
                           std::size_t max_depth, std::uint32_t denominator,
                           std::size_t max_states);

const char* word_op_name(WordOp op);
const char* outcome_name(Outcome o);

struct CrosscheckBudgets {
  std::size_t word_depth = 30;
  std::size_t word_states = 2000;
  std::uint32_t m = 3;
  std::size_t concrete_depth = 8;
  std::uint32_t denominator = 4;
  std::size_t concrete_states = 20000;
};

struct CrosscheckReport {
  bool agree = true;
  bool pipeline_answer = false;
  Outcome word_outcome = Outcome::DepthBoundedUnknown;
  Outcome concrete_outcome = Outcome::DepthBoundedUnknown;
  std::string text;
};

// Runs the symbolic decision, the word-level oracle (both on the
// non-consuming reduction) and the concrete oracle (on the original net),
// then checks: word Found ⇒ YES, word ExhaustedNo ⇒ NO, concrete Found ⇒
// YES. A concrete ExhaustedNo is informational only since it is relative
// to the chosen m.
CrosscheckReport crosscheck(const Net& original, std::string_view initial,
                            std::string_view target,
                            const CrosscheckBudgets& budgets);

}  // namespace tpn
