#include "copeland/election.hpp"

namespace copeland {

int vote(const Instance& inst, VertexId u, VertexId x, VertexId y) {
  int tx = inst.effective_tier(u, x);  // throws if x is not acceptable to u
  int ty = inst.effective_tier(u, y);
  if (tx < ty) return 1;
  if (ty < tx) return -1;
  return 0;
}

ElectionResult compare_partners(const Instance& inst,
                                std::span<const VertexId> pm,
                                std::span<const VertexId> pn) {
  ElectionResult r;
  for (VertexId u = 0; u < inst.num_vertices(); ++u) {
    VertexId a = pm[u], b = pn[u];
    if (a == b) continue;
    int ta = inst.effective_tier_unchecked(u, a);
    int tb = inst.effective_tier_unchecked(u, b);
    if (ta < tb)
      ++r.votes_for;
    else if (tb < ta)
      ++r.votes_against;
  }
  r.delta = r.votes_for - r.votes_against;
  r.outcome = r.delta > 0   ? ElectionResult::Outcome::win
              : r.delta < 0 ? ElectionResult::Outcome::loss
                            : ElectionResult::Outcome::tie;
  return r;
}

long long delta_partners(const Instance& inst, std::span<const VertexId> pm,
                         std::span<const VertexId> pn) {
  long long delta = 0;
  for (VertexId u = 0; u < inst.num_vertices(); ++u) {
    VertexId a = pm[u], b = pn[u];
    if (a == b) continue;
    int ta = inst.effective_tier_unchecked(u, a);
    int tb = inst.effective_tier_unchecked(u, b);
    if (ta < tb)
      ++delta;
    else if (tb < ta)
      --delta;
  }
  return delta;
}

ElectionResult compare(const Instance& inst, const Matching& m,
                       const Matching& n) {
  m.validate_for(inst);
  n.validate_for(inst);
  auto pm = m.partners(inst.num_vertices());
  auto pn = n.partners(inst.num_vertices());
  return compare_partners(inst, pm, pn);
}

std::optional<Edge> find_blocking_pair(const Instance& inst,
                                       const Matching& m) {
  m.validate_for(inst);
  auto mate = m.partners(inst.num_vertices());
  for (const Edge& e : inst.edges()) {
    if (mate[e.u] == e.v) continue;
    if (vote(inst, e.u, e.v, mate[e.u]) > 0 &&
        vote(inst, e.v, e.u, mate[e.v]) > 0)
      return e;
  }
  return std::nullopt;
}

bool is_stable(const Instance& inst, const Matching& m) {
  return !find_blocking_pair(inst, m).has_value();
}

}  // namespace copeland
