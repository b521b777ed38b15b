#include "rigid4/group.hpp"

#include <deque>
#include <unordered_set>

namespace rigid4 {

GroupReport enumerate_group(const std::vector<CycMatrix>& gens, std::uint64_t cap) {
  if (gens.empty()) throw DomainError("enumerate_group needs at least one generator");
  if (cap < 1) throw DomainError("cap must be >= 1");
  long cond = 1;
  int n = gens[0].dim();
  for (const auto& g : gens) {
    if (g.dim() != n) throw DomainError("generators must share one dimension");
    cond = lcm_long(cond, g.conductor());
  }
  std::vector<CycMatrix> gs;
  gs.reserve(gens.size());
  for (const auto& g : gens) {
    CycMatrix lifted = g.lifted(cond);
    lifted.inverse();  // throws if not invertible
    gs.push_back(std::move(lifted));
  }

  GroupReport rep;
  rep.cap = cap;
  CycMatrix id = CycMatrix::identity(n, cond);
  std::unordered_set<std::string> seen;
  // frontier holds serialized elements; matrices are rebuilt on demand to
  // keep the peak memory at one key per group element
  std::deque<std::string> frontier;
  seen.insert(id.canonical_key());
  frontier.push_back(id.canonical_key());

  while (!frontier.empty()) {
    CycMatrix g = CycMatrix::from_canonical_key(frontier.front());
    frontier.pop_front();
    for (const auto& t : gs) {
      std::string key = (g * t).canonical_key();
      if (seen.insert(key).second) {
        if (seen.size() > cap) {
          rep.cap_exceeded = true;
          return rep;
        }
        frontier.push_back(std::move(key));
      }
    }
  }

  rep.order = seen.size();
  for (const auto& key : seen) {
    CycMatrix g = CycMatrix::from_canonical_key(key);
    if (g.is_scalar()) ++rep.scalar_order;
    bool central = true;
    for (const auto& t : gs)
      if (g * t != t * g) {
        central = false;
        break;
      }
    if (central) ++rep.center_order;
  }
  return rep;
}

}  // namespace rigid4
