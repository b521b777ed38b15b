#include <doctest.h>

#include "rigid4/stargraph.hpp"

using namespace rigid4;

TEST_CASE("dmu on the named diagrams") {
  // G-II: 16 - (6 + 8 + 4) + 2
  CHECK(dmu(StarDiagram::named("GII")) == 0);
  CHECK(dmu(StarDiagram::named("GIV")) == 0);
  for (const char* n : {"GI", "GIII", "GV", "GVI", "GVII"}) CHECK(dmu(StarDiagram::named(n)) == 0);
  // rank-2 hypergeometric: k=3, n=2, all partitions 1^2: 4 - 6 + 2
  CHECK(dmu(StarDiagram::from_partitions(2, {{1, 1}, {1, 1}, {1, 1}})) == 0);
  // a non-rigid count for contrast
  CHECK(dmu(StarDiagram::from_partitions(2, {{1, 1}, {1, 1}, {1, 1}, {1, 1}})) == 2);
}

TEST_CASE("legs with the trivial partition do not change dmu") {
  StarDiagram a = StarDiagram::from_partitions(4, {{2, 1, 1}, {2, 2}, {1, 1, 1, 1}});
  StarDiagram b = StarDiagram::from_partitions(4, {{2, 1, 1}, {2, 2}, {4}, {1, 1, 1, 1}});
  CHECK(dmu(a) == dmu(b));
  CHECK(a == b);  // the trivial leg is dropped at construction
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(StarDiagram::from_partitions(4, {{2, 3}}), DomainError);   // not sorted
  CHECK_THROWS_AS(StarDiagram::from_partitions(4, {{2, 1}}), DomainError);   // wrong sum
  CHECK_THROWS_AS(StarDiagram::from_node_values(4, {{3, 3}}), DomainError);  // not decreasing
  CHECK(StarDiagram::from_node_values(4, {{2, 1}}).legs[0] == std::vector<long>{2, 1, 1});
}

TEST_CASE("reduce_step on G-II follows the worked trace") {
  StarDiagram g2 = StarDiagram::named("GII");
  StepResult sr = reduce_step(g2);
  REQUIRE(!sr.failed_leg);
  REQUIRE(sr.steps.size() == 3);  // A, then B, then C
  CHECK(sr.steps[0].move == Move::A);
  CHECK(sr.steps[0].result.central == 3);
  CHECK(sr.steps[1].move == Move::B);
  CHECK(sr.steps[2].move == Move::C);
  // the result is the rank-3 hypergeometric star
  CHECK(sr.steps[2].result == StarDiagram::named("H3"));
}

TEST_CASE("reduce_step on G-IV fails at move C") {
  StepResult sr = reduce_step(StarDiagram::named("GIV"));
  REQUIRE(sr.failed_leg);
  CHECK(sr.steps.back().result.central == 2);  // central 2 ...
  CHECK(StarDiagram::named("GIV").node_values(*sr.failed_leg)[0] == 3);  // below neighbor 3
}

TEST_CASE("terminal diagram is a fixed point") {
  StarDiagram t = StarDiagram::from_partitions(1, {});
  CHECK(t.is_terminal());
  CHECK(reduce_step(t).steps.empty());
}

TEST_CASE("is_rigid classifies the rank-4 diagrams") {
  for (const char* n : {"GI", "GII", "GIII", "GV", "GVI", "GVII"}) {
    ReductionOutcome out = is_rigid(StarDiagram::named(n));
    CHECK(out.rigid);
    CHECK(out.trace.back().result.is_terminal());
  }
  ReductionOutcome g4 = is_rigid(StarDiagram::named("GIV"));
  CHECK(!g4.rigid);
  CHECK(g4.failed_leg.has_value());
}

TEST_CASE("G-II passes through both hypergeometric stages") {
  ReductionOutcome out = is_rigid(StarDiagram::named("GII"));
  bool saw_h3 = false, saw_h2 = false;
  for (const auto& s : out.trace) {
    if (s.result == StarDiagram::named("H3")) saw_h3 = true;
    if (s.result == StarDiagram::named("H2")) saw_h2 = true;
  }
  CHECK(saw_h3);
  CHECK(saw_h2);
}

TEST_CASE("reduction preserves dmu = 0 and decreases the center") {
  for (const char* n : {"GI", "GII", "GIII", "GV", "GVI", "GVII"}) {
    ReductionOutcome out = is_rigid(StarDiagram::named(n));
    long prev_central = StarDiagram::named(n).central;
    for (const auto& s : out.trace) {
      CHECK(dmu(s.result) == 0);
      if (s.move == Move::A) {
        CHECK(s.result.central < prev_central);
        prev_central = s.result.central;
      }
    }
  }
}

TEST_CASE("is_rigid rejects dmu != 0") {
  CHECK_THROWS_AS(is_rigid(StarDiagram::from_partitions(2, {{1, 1}, {1, 1}, {1, 1}, {1, 1}})),
                  DomainError);
}

TEST_CASE("rendering is one line per leg") {
  std::string r = StarDiagram::named("GII").render();
  CHECK(r.find("center 4") != std::string::npos);
  CHECK(r.find("4 - 3 - 2 - 1") != std::string::npos);
}
