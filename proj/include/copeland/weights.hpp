#pragma once

#include <optional>

#include "copeland/oracle.hpp"

namespace copeland {

enum class WeightKind { wt_star_exact, wt_star_estimated, popularity };

// Rational weights on the augmented edge set: one per instance edge plus one
// per self-loop.
struct EdgeWeights {
  std::vector<Rational> edge;  // by edge index
  std::vector<Rational> loop;  // by vertex id
  WeightKind kind = WeightKind::popularity;
};

// Weight function whose value on any self-loop-completed matching equals the
// matching's average margin against the uniform mixture q: each endpoint of
// an edge contributes (mass of strictly worse options, self included) minus
// (mass of strictly better options); a loop weighs loop_coord - 1.
EdgeWeights build_wt_star(const Instance& inst, const UniformMarginals& q);

// Weight function for testing popularity of m: an edge weighs the two
// endpoint votes for each other against their partners in m; a loop weighs 0
// if the vertex is unmatched in m, else -1. The completion of m itself
// always weighs 0.
EdgeWeights build_popularity_weights(const Instance& inst, const Matching& m);

// Weight of the self-loop completion of m.
Rational matching_weight(const Instance& inst, const EdgeWeights& w,
                         const Matching& m);

// Vertex potentials certifying popularity via weak duality (odd-set duals
// are identically zero and not stored).
struct DualCertificate {
  std::vector<long long> y;  // by vertex id
};

struct DualCheck {
  bool feasible = false;  // every edge and loop constraint holds
  bool zero_sum = false;  // sum of y is 0
  long long objective = 0;
  std::vector<long long> edge_slack;  // y_u + y_v - wt(u,v), by edge index
  std::optional<Edge> first_violation;
  bool certified() const { return feasible && zero_sum; }
};

// Checks cert against the popularity weights of m. certified() == true
// proves m popular: every completed matching weighs at most sum(y) = 0.
DualCheck verify_dual(const Instance& inst, const Matching& m,
                      const DualCertificate& cert);

}  // namespace copeland
