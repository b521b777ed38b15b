#ifndef RIGID4_GROUP_HPP
#define RIGID4_GROUP_HPP

#include <cstdint>

#include "rigid4/matrix.hpp"

namespace rigid4 {

struct GroupReport {
  bool cap_exceeded = false;
  std::uint64_t order = 0;  // valid only when !cap_exceeded
  std::uint64_t center_order = 0;
  std::uint64_t scalar_order = 0;
  std::uint64_t cap = 0;
};

inline constexpr std::uint64_t kDefaultGroupCap = 200000;

// Breadth-first closure of the group generated by the given invertible
// matrices, with exact canonical-form hashing. Counts the center (elements
// commuting with every generator) and the scalar subgroup. When the closure
// exceeds `cap`, reports cap_exceeded and withholds partial counts.
GroupReport enumerate_group(const std::vector<CycMatrix>& gens,
                            std::uint64_t cap = kDefaultGroupCap);

}  // namespace rigid4

#endif
