#pragma once

#include <string>
#include <vector>

#include "copeland/election.hpp"
#include "copeland/instance.hpp"
#include "copeland/matching.hpp"
#include "copeland/rational.hpp"

namespace copeland::test {

// The four-agent instance with no stable matching but two popular ones.
inline Instance fig1a() {
  return parse_instance(
      "instance v1\n"
      "a: b > c > d\n"
      "b: c > a > d\n"
      "c: a > b > d\n"
      "d: a > b > c\n");
}

// Cyclic triangle; no popular matching exists.
inline Instance fig1b() {
  return parse_instance(
      "instance v1\n"
      "1: 2 > 3\n"
      "2: 3 > 1\n"
      "3: 1 > 2\n");
}

// Bipartite with ties (one side fully indifferent); no popular matching.
inline Instance fig1c() {
  return parse_instance(
      "instance v1\n"
      "1: 6 > 4 > 2\n"
      "3: 6 > 4 > 2\n"
      "5: 6 > 4 > 2\n"
      "2: 1 = 3 = 5\n"
      "4: 1 = 3 = 5\n"
      "6: 1 = 3 = 5\n");
}

inline Instance single_edge() {
  return parse_instance(
      "instance v1\n"
      "u: v\n"
      "v: u\n");
}

inline Instance edgeless(int n) {
  std::string text = "instance v1\n";
  for (int i = 0; i < n; ++i) text += "x" + std::to_string(i) + ":\n";
  return parse_instance(text);
}

inline Matching by_names(const Instance& inst,
                         const std::vector<std::pair<std::string,
                                                     std::string>>& pairs) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs)
    edges.push_back(make_edge(*inst.find_vertex(a), *inst.find_vertex(b)));
  return Matching(std::move(edges));
}

// Independent enumeration for cross-checks: filters all 2^|E| edge subsets.
// Usable only on tiny instances, which is the point.
inline std::vector<Matching> brute_matchings(const Instance& inst) {
  const auto& edges = inst.edges();
  if (edges.size() > 20) throw std::runtime_error("instance too big for brute");
  std::vector<Matching> result;
  for (unsigned long mask = 0; mask < (1UL << edges.size()); ++mask) {
    std::vector<Edge> chosen;
    std::vector<char> used(inst.num_vertices(), 0);
    bool ok = true;
    for (size_t i = 0; i < edges.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (used[edges[i].u] || used[edges[i].v]) ok = false;
      used[edges[i].u] = used[edges[i].v] = 1;
      chosen.push_back(edges[i]);
    }
    if (ok) result.push_back(Matching(std::move(chosen)));
  }
  return result;
}

// Independent maximum of edge+loop weight over all matchings, via the brute
// enumerator above.
inline Rational brute_max_weight(const Instance& inst,
                                 const std::vector<Rational>& edge_w,
                                 const std::vector<Rational>& loop_w) {
  bool first = true;
  Rational best(0);
  for (const Matching& m : brute_matchings(inst)) {
    auto mate = m.partners(inst.num_vertices());
    Rational total(0);
    for (const Edge& e : m.edges()) total += edge_w[inst.edge_index(e.u, e.v)];
    for (VertexId u = 0; u < inst.num_vertices(); ++u)
      if (mate[u] == kSelf) total += loop_w[u];
    if (first || total > best) {
      best = total;
      first = false;
    }
  }
  return best;
}

}  // namespace copeland::test
