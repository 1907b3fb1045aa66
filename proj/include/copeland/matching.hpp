#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "copeland/instance.hpp"

namespace copeland {

// A set of pairwise vertex-disjoint edges. Canonical form: edges normalized
// (u < v) and sorted, so Matchings compare/order lexicographically by edge
// index sequence.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool contains(const Edge& e) const;

  // Partner array over n vertices; kSelf for unmatched.
  std::vector<VertexId> partners(int num_vertices) const;

  // Throws ValidationError if some pair is not an edge of inst.
  void validate_for(const Instance& inst) const;

  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
};

// Self-loop completion: every vertex covered exactly once, by a pair or by
// its loop.
struct AugmentedMatching {
  Matching base;
  std::vector<VertexId> loops;  // unmatched vertices, ascending
};

AugmentedMatching augment(const Instance& inst, const Matching& m);

Matching parse_matching(std::istream& in, const Instance& inst);
Matching parse_matching(std::string_view text, const Instance& inst);
std::string serialize_matching(const Matching& m, const Instance& inst);

// Human-oriented "{(a,b), (c,d)}" form used in reports and logs.
std::string format_matching(const Matching& m, const Instance& inst);

}  // namespace copeland
