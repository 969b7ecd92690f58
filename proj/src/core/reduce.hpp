#pragma once

#include "core/model.hpp"

namespace tpn {

// Coverability-preserving non-consuming variant of a net: for each
// transition, pre is first capped at multiplicity 1 per (place, variable)
// pair and the capped pre is absorbed into post. Transition ids are kept.
Net make_nonconsuming(const Net& net);

}  // namespace tpn
