#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "copeland/rational.hpp"

namespace copeland {

using VertexId = int;

// The implicit self-option in votes: every vertex ranks itself strictly below
// all of its neighbors, and being unmatched means being matched to self.
inline constexpr VertexId kSelf = -1;

// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A roommates instance: a graph with a weak ranking (tiers) per vertex over
// its neighbors. Immutable after construction; tiers are normalized so each
// vertex uses exactly {1..T_u}. Lower tier = more preferred.
class Instance {
 public:
  Instance() = default;

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::string& name(VertexId u) const { return names_[u]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId u) const {
    return neighbors_[u];
  }
  bool adjacent(VertexId u, VertexId v) const {
    return u != v && tier_at(u, v) != 0;
  }
  // Index of (u,v) in edges(), or -1.
  int edge_index(VertexId u, VertexId v) const {
    return edge_index_[flat(u, v)];
  }

  // Tier of neighbor v in u's ranking (>= 1). Throws if not adjacent.
  int tier(VertexId u, VertexId v) const;
  int tier_count(VertexId u) const { return tier_count_[u]; }

  // Tier with the self-option mapped below every neighbor; x may be kSelf.
  int effective_tier(VertexId u, VertexId x) const;

  // Unchecked variant for hot loops over already-validated partner arrays:
  // x must be a neighbor of u, u itself, or kSelf.
  int effective_tier_unchecked(VertexId u, VertexId x) const noexcept {
    if (x == kSelf || x == u) return 0x7fffffff;
    return tiers_[flat(u, x)];
  }

  // Subinstance induced on `keep` (names preserved, tiers renormalized).
  Instance induced(const std::vector<VertexId>& keep) const;

  // Names of isolated vertices; permitted but worth flagging.
  std::vector<std::string> validation_warnings() const;

  std::uint64_t content_hash() const;

 private:
  friend class InstanceBuilder;

  size_t flat(VertexId u, VertexId v) const {
    return static_cast<size_t>(u) * names_.size() + static_cast<size_t>(v);
  }
  int tier_at(VertexId u, VertexId v) const { return tiers_[flat(u, v)]; }

  std::vector<std::string> names_;
  std::vector<int> tiers_;       // n*n, 0 = not adjacent
  std::vector<int> edge_index_;  // n*n, -1 = not adjacent
  std::vector<int> tier_count_;
  std::vector<std::vector<VertexId>> neighbors_;  // sorted by id
  std::vector<Edge> edges_;                       // sorted
};

// Collects raw (possibly non-contiguous) tiers, then validates mutual
// acceptability and normalizes.
class InstanceBuilder {
 public:
  VertexId add_vertex(const std::string& name);
  VertexId vertex(const std::string& name) const;
  bool has_vertex(const std::string& name) const;
  int num_vertices() const { return static_cast<int>(names_.size()); }
  // Declares that u ranks v at `tier` (raw positive value).
  void add_preference(VertexId u, VertexId v, int tier);
  Instance build() &&;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::pair<VertexId, int>>> prefs_;
};

Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

// Erdős–Rényi edges with exact rational probability, uniform raw tiers in
// 1..max_tiers per (vertex, neighbor). Pure function of the seed.
Instance random_instance(int n, const Rational& edge_probability, int max_tiers,
                         std::uint64_t seed);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace copeland
