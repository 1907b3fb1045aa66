#pragma once

#include <optional>
#include <span>

#include "copeland/matching.hpp"

namespace copeland {

// One head-to-head tally between two matchings.
struct ElectionResult {
  enum class Outcome { win, tie, loss };
  long long votes_for = 0;      // phi(M,N)
  long long votes_against = 0;  // phi(N,M)
  long long delta = 0;          // votes_for - votes_against
  Outcome outcome = Outcome::tie;
};

// u's vote between x and y, each a neighbor of u or kSelf: +1 if u strictly
// prefers x, -1 if y, 0 on a tie (unmatched/self ranks below every neighbor).
int vote(const Instance& inst, VertexId u, VertexId x, VertexId y);

ElectionResult compare(const Instance& inst, const Matching& m,
                       const Matching& n);

// Fast path over precomputed partner arrays.
long long delta_partners(const Instance& inst, std::span<const VertexId> pm,
                         std::span<const VertexId> pn);
ElectionResult compare_partners(const Instance& inst,
                                std::span<const VertexId> pm,
                                std::span<const VertexId> pn);

// Lexicographically least blocking pair, if any. A pair blocks only on
// strict mutual preference; ties do not block.
std::optional<Edge> find_blocking_pair(const Instance& inst,
                                       const Matching& m);
bool is_stable(const Instance& inst, const Matching& m);

}  // namespace copeland
