#pragma once

#include <cstdint>

#include "core/regions.hpp"
#include "core/saturation.hpp"

namespace tpn {

struct AccelerateResult {
  SimpleExpr s1;  // length 2, front unstarred, rear starred
  SimpleExpr sl;  // length 4, shape a b* c d*
  SimpleExpr r;   // length 2, front unstarred, rear starred
  std::uint32_t iterations = 0;  // collapse steps executed after reaching S3
};

// Closes the cover set of a two-atom expression x1·x0*: saturate, then
// alternately prepend the incremented rear symbol and saturate, collapsing
// every result back to four atoms by starring position 1 and dropping
// position 2. Stops when the collapsed expression repeats (structural
// equality, stars included). Throws ShapeError unless the input is a
// two-atom expression with unstarred front and starred rear.
AccelerateResult accelerate(const SatCtx& ctx, const SimpleExpr& s0);

}  // namespace tpn
