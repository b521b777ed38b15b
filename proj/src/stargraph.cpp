#include "rigid4/stargraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rigid4/rat.hpp"

namespace rigid4 {

StarDiagram StarDiagram::from_partitions(long n, std::vector<std::vector<long>> parts) {
  StarDiagram d;
  d.central = n;
  for (auto& p : parts) {
    if (p.empty()) throw DomainError("empty partition");
    long sum = 0;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 0) throw DomainError("partition parts must be positive");
      if (i > 0 && p[i] > p[i - 1]) throw DomainError("partition parts must be non-increasing");
      sum += p[i];
    }
    if (sum != n) throw DomainError("leg partition does not sum to the central value");
    if (p.size() == 1) continue;  // trivial partition (n): apparent singularity, dropped
    d.legs.push_back(std::move(p));
  }
  return d;
}

StarDiagram StarDiagram::from_node_values(long n, const std::vector<std::vector<long>>& nodes) {
  std::vector<std::vector<long>> parts;
  for (const auto& leg : nodes) {
    std::vector<long> p;
    long prev = n;
    for (long v : leg) {
      if (v <= 0 || v >= prev) throw DomainError("node values must decrease strictly from the center");
      p.push_back(prev - v);
      prev = v;
    }
    p.push_back(prev);  // implicit final part down to zero
    parts.push_back(std::move(p));
  }
  return from_partitions(n, std::move(parts));
}

StarDiagram StarDiagram::named(const std::string& name) {
  if (name == "GI" || name == "G-I")
    return from_partitions(4, {{3, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}});
  if (name == "GII" || name == "G-II")
    return from_partitions(4, {{2, 1, 1}, {2, 2}, {1, 1, 1, 1}});
  if (name == "GIII" || name == "G-III")
    return from_partitions(4, {{2, 1, 1}, {2, 1, 1}, {2, 1, 1}});
  if (name == "GIV" || name == "G-IV")
    return from_partitions(4, {{3, 1}, {3, 1}, {3, 1}, {1, 1, 1, 1}});
  if (name == "GV" || name == "G-V")
    return from_partitions(4, {{2, 2}, {3, 1}, {3, 1}, {2, 1, 1}});
  if (name == "GVI" || name == "G-VI")
    return from_partitions(4, {{2, 2}, {2, 2}, {2, 2}, {3, 1}});
  if (name == "GVII" || name == "G-VII")
    return from_partitions(4, {{3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}});
  if (name == "H3")
    return from_partitions(3, {{1, 1, 1}, {2, 1}, {1, 1, 1}});
  if (name == "H2")
    return from_partitions(2, {{1, 1}, {1, 1}, {1, 1}});
  throw DomainError("unknown diagram name '" + name + "'");
}

std::vector<long> StarDiagram::node_values(size_t leg) const {
  std::vector<long> v;
  long cur = central;
  const auto& p = legs[leg];
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    cur -= p[i];
    if (cur > 0) v.push_back(cur);
  }
  return v;
}

std::string StarDiagram::render() const {
  std::ostringstream os;
  os << "center " << central;
  if (legs.empty()) return os.str();
  os << "\n";
  for (size_t i = 0; i < legs.size(); ++i) {
    os << "  leg " << (i + 1) << ":";
    auto nodes = node_values(i);
    os << " " << central;
    for (long v : nodes) os << " - " << v;
    os << "   (partition";
    for (long p : legs[i]) os << " " << p;
    os << ")";
    if (i + 1 < legs.size()) os << "\n";
  }
  return os.str();
}

bool StarDiagram::operator==(const StarDiagram& o) const {
  return central == o.central && legs == o.legs;
}

long dmu(const StarDiagram& d) {
  long k = static_cast<long>(d.legs.size());
  long n = d.central;
  long s = 0;
  for (const auto& leg : d.legs)
    for (long p : leg) s += p * p;
  // legs encoding the trivial partition were dropped at construction and do
  // not change the value (their contribution (k+1 term) - n^2 cancels)
  return (-2 + k) * n * n - s + 2;
}

StepResult reduce_step(const StarDiagram& d) {
  StepResult out;
  if (d.is_terminal()) return out;
  if (dmu(d) != 0) throw DomainError("reduction requires d_mu = 0");

  // Move A: replace the central value by (sum of neighbors) - n; the
  // neighbor of leg j is n - p_1^j.
  long n = d.central;
  long sum_first = 0;
  for (const auto& leg : d.legs) sum_first += leg[0];
  long n2 = (static_cast<long>(d.legs.size()) - 1) * n - sum_first;

  StarDiagram a = d;
  a.central = n2;
  long shift = n - n2;
  bool need_b = false;
  for (size_t j = 0; j < a.legs.size(); ++j) {
    long p = a.legs[j][0] - shift;
    if (p < 0) {
      // central value fell below the neighbor: C cannot rebuild a partition
      out.steps.push_back({Move::A, a});
      out.failed_leg = j;
      return out;
    }
    a.legs[j][0] = p;
    if (p == 0) need_b = true;
  }
  out.steps.push_back({Move::A, a});

  if (need_b) {
    StarDiagram b = a;
    for (auto& leg : b.legs)
      leg.erase(std::remove(leg.begin(), leg.end(), 0L), leg.end());
    // drop legs reduced to the trivial partition
    b.legs.erase(std::remove_if(b.legs.begin(), b.legs.end(),
                                [](const std::vector<long>& l) { return l.size() <= 1; }),
                 b.legs.end());
    out.steps.push_back({Move::B, b});
    a = b;
  }

  bool need_c = false;
  for (const auto& leg : a.legs)
    if (!std::is_sorted(leg.begin(), leg.end(), std::greater<long>())) need_c = true;
  if (need_c) {
    StarDiagram c = a;
    for (auto& leg : c.legs) std::sort(leg.begin(), leg.end(), std::greater<long>());
    out.steps.push_back({Move::C, c});
  }
  return out;
}

ReductionOutcome is_rigid(const StarDiagram& d) {
  if (dmu(d) != 0) throw DomainError("is_rigid requires d_mu = 0");
  ReductionOutcome out;
  StarDiagram cur = d;
  while (!cur.is_terminal()) {
    StepResult sr = reduce_step(cur);
    for (auto& s : sr.steps) out.trace.push_back(s);
    if (sr.failed_leg) {
      out.rigid = false;
      out.failed_leg = sr.failed_leg;
      return out;
    }
    cur = out.trace.back().result;
  }
  out.rigid = true;
  return out;
}

}  // namespace rigid4
