#include "copeland/weights.hpp"

namespace copeland {

EdgeWeights build_wt_star(const Instance& inst, const UniformMarginals& q) {
  if (static_cast<int>(q.edge_coord.size()) != inst.num_edges() ||
      static_cast<int>(q.loop_coord.size()) != inst.num_vertices())
    throw std::invalid_argument("marginals do not cover the instance");
  EdgeWeights w;
  w.kind = q.mode == UniformMarginals::Mode::exact
               ? WeightKind::wt_star_exact
               : WeightKind::wt_star_estimated;
  // One endpoint's fractional vote for the other, versus its assignment
  // under q. The self-option counts as strictly worse than any neighbor.
  auto side = [&](VertexId a, VertexId b) {
    Rational total = q.loop_coord[a];
    int tb = inst.tier(a, b);
    for (VertexId c : inst.neighbors(a)) {
      int tc = inst.tier(a, c);
      if (tc > tb)
        total += q.edge_coord[inst.edge_index(a, c)];
      else if (tc < tb)
        total -= q.edge_coord[inst.edge_index(a, c)];
    }
    return total;
  };
  for (const Edge& e : inst.edges()) w.edge.push_back(side(e.u, e.v) + side(e.v, e.u));
  for (VertexId u = 0; u < inst.num_vertices(); ++u)
    w.loop.push_back(q.loop_coord[u] - 1);
  return w;
}

EdgeWeights build_popularity_weights(const Instance& inst, const Matching& m) {
  m.validate_for(inst);
  auto mate = m.partners(inst.num_vertices());
  EdgeWeights w;
  w.kind = WeightKind::popularity;
  for (const Edge& e : inst.edges())
    w.edge.push_back(Rational(vote(inst, e.u, e.v, mate[e.u]) +
                              vote(inst, e.v, e.u, mate[e.v])));
  for (VertexId u = 0; u < inst.num_vertices(); ++u)
    w.loop.push_back(Rational(mate[u] == kSelf ? 0 : -1));
  return w;
}

Rational matching_weight(const Instance& inst, const EdgeWeights& w,
                         const Matching& m) {
  if (static_cast<int>(w.edge.size()) != inst.num_edges() ||
      static_cast<int>(w.loop.size()) != inst.num_vertices())
    throw std::invalid_argument("weights do not cover the instance");
  auto mate = m.partners(inst.num_vertices());
  Rational total(0);
  for (const Edge& e : m.edges()) {
    int idx = inst.edge_index(e.u, e.v);
    if (idx < 0)
      throw ValidationError("matching pair is not an instance edge");
    total += w.edge[idx];
  }
  for (VertexId u = 0; u < inst.num_vertices(); ++u)
    if (mate[u] == kSelf) total += w.loop[u];
  return total;
}

DualCheck verify_dual(const Instance& inst, const Matching& m,
                      const DualCertificate& cert) {
  if (static_cast<int>(cert.y.size()) != inst.num_vertices())
    throw std::invalid_argument("certificate must assign y to every vertex");
  auto mate = m.partners(inst.num_vertices());
  DualCheck check;
  check.feasible = true;
  for (VertexId u = 0; u < inst.num_vertices(); ++u)
    check.objective += cert.y[u];
  check.zero_sum = check.objective == 0;

  auto mark_violation = [&](const Edge& e) {
    if (check.feasible) check.first_violation = e;
    check.feasible = false;
  };
  for (const Edge& e : inst.edges()) {
    long long wt = vote(inst, e.u, e.v, mate[e.u]) +
                   vote(inst, e.v, e.u, mate[e.v]);
    long long slack = cert.y[e.u] + cert.y[e.v] - wt;
    check.edge_slack.push_back(slack);
    if (slack < 0) mark_violation(e);
  }
  for (VertexId u = 0; u < inst.num_vertices(); ++u) {
    long long wt = mate[u] == kSelf ? 0 : -1;
    if (cert.y[u] < wt) mark_violation(Edge{u, u});
  }
  return check;
}

}  // namespace copeland
