#ifndef RIGID4_STARGRAPH_HPP
#define RIGID4_STARGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "rigid4/rat.hpp"

namespace rigid4 {

// Star graph encoding of multiplicity data: one central node of value n and
// one leg per puncture. Each leg is stored as the partition of n it encodes
// (parts non-increasing); the node values along the leg are the partial
// complements n - p1, n - p1 - p2, ..., zeros omitted.
struct StarDiagram {
  long central = 1;
  std::vector<std::vector<long>> legs;  // each a partition of `central`

  static StarDiagram from_partitions(long n, std::vector<std::vector<long>> parts);
  static StarDiagram from_node_values(long n, const std::vector<std::vector<long>>& nodes);
  // Named rank-4 diagrams G-I ... G-VII plus the hypergeometric ranks.
  static StarDiagram named(const std::string& name);

  std::vector<long> node_values(size_t leg) const;
  bool is_terminal() const { return central == 1 && legs.empty(); }
  std::string render() const;  // ASCII, one line per leg
  bool operator==(const StarDiagram& o) const;
};

// Expected dimension of the character variety at genus 0.
long dmu(const StarDiagram& d);

enum class Move { A, B, C };

struct ReductionStep {
  Move move;
  StarDiagram result;
};

struct ReductionOutcome {
  bool rigid = false;
  std::vector<ReductionStep> trace;
  // set when move C is impossible: index of the offending leg
  std::optional<size_t> failed_leg;
};

// One A;B;C round. Returns the steps taken, or the failure point.
struct StepResult {
  std::vector<ReductionStep> steps;
  std::optional<size_t> failed_leg;
};
StepResult reduce_step(const StarDiagram& d);

// Runs the reduction to the terminal node or to a C-failure. Requires
// dmu(d) == 0 (throws DomainError otherwise). Terminates: every A strictly
// decreases the central value when dmu = 0 and g = 0.
ReductionOutcome is_rigid(const StarDiagram& d);

}  // namespace rigid4

#endif
