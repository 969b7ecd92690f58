#include "core/reduce.hpp"

namespace tpn {

Net make_nonconsuming(const Net& net) {
  Net out = net;
  for (auto& t : out.transitions) {
    for (auto& arc : t.pre) arc.mult = 1;
    for (const auto& arc : t.pre)
      t.post.push_back(PostArc{arc.place, arc.var, 1});
  }
  out.canonicalize_and_validate();
  return out;
}

}  // namespace tpn
