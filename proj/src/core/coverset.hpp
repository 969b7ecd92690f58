#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "core/accelerate.hpp"
#include "core/model.hpp"
#include "core/regions.hpp"
#include "core/saturation.hpp"

namespace tpn {

using BigNat = boost::multiprecision::cpp_int;

struct CoverQuery {
  Net net;  // non-consuming
  PlaceIdx initial_place = 0;
  std::size_t target = 0;  // transition index
};

// Validates names and the non-consuming requirement (SemanticError).
CoverQuery make_query(Net net, std::string_view initial_place,
                      std::string_view target_transition);

// Number of simple expressions of length m: 2^((P·(cmax+2)·m)+m).
BigNat expression_count_bound(std::uint32_t m, std::uint32_t places,
                              std::uint32_t cmax);

struct CoverSet {
  std::vector<SimpleExpr> expressions;  // discovery order, lengths 2 or 4
  std::uint32_t rounds = 0;
};

// Iterates accelerate from S0 = {(p,0)}∅*, recording all three result
// expressions per round, until the loop expression R revisits.
CoverSet compute_coverset(const CoverQuery& q);

struct CoverEvidence {
  bool covered = false;
  std::optional<SimpleExpr> witness;
  std::optional<std::uint32_t> witness_round;  // 1-based
  CoverSet set;  // full on NO, truncated at the witness on YES
};

// Checks each recorded expression for target enabledness, short-circuiting.
CoverEvidence exists_cover(const CoverQuery& q);

struct StreamingResult {
  bool covered = false;
  std::optional<SimpleExpr> witness;
  std::uint64_t rounds_run = 0;
};

// Same answer as exists_cover while storing only the current round. The
// expression index is capped at 3·B(2). Throws BudgetError when the cap
// exceeds `budget` and force is not set.
StreamingResult exists_cover_streaming(const CoverQuery& q,
                                       const BigNat& budget, bool force);

}  // namespace tpn
