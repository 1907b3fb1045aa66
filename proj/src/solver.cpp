#include "copeland/solver.hpp"

#include <cmath>
#include <mutex>

#include "copeland/dense_blossom.hpp"
#include "copeland/parallel.hpp"

namespace copeland {

namespace {

void check_weights(const Instance& inst, const EdgeWeights& w) {
  if (static_cast<int>(w.edge.size()) != inst.num_edges() ||
      static_cast<int>(w.loop.size()) != inst.num_vertices())
    throw std::invalid_argument("weights do not cover the instance");
}

SolverResult solve_exhaustive(const Instance& inst, const EdgeWeights& w,
                              long long budget) {
  Rational loop_total(0);
  for (const auto& lw : w.loop) loop_total += lw;

  // Track the running total as (sum of edges) + loop_total - (loops of
  // matched vertices): stream with incremental weight bookkeeping.
  bool have_best = false;
  Rational best_weight(0);
  Matching best;
  long long count = 0;
  auto consider = [&](const Matching& m) {
    if (++count > budget) throw BudgetExceeded(budget);
    Rational value = loop_total;
    for (const Edge& e : m.edges())
      value += w.edge[inst.edge_index(e.u, e.v)] - w.loop[e.u] - w.loop[e.v];
    // Enumeration is lexicographic, so on full ties the first stays:
    // fewest edges wins, then lexicographically least edge list.
    if (!have_best || value > best_weight ||
        (value == best_weight && m.size() < best.size())) {
      have_best = true;
      best_weight = value;
      best = m;
    }
  };
  for_each_matching(inst, consider);
  return {best, best_weight, SolverBackend::exhaustive};
}

SolverResult solve_dense(const Instance& inst, const EdgeWeights& w) {
  // Shift: picking edge (u,v) instead of both loops gains
  // edge(u,v) - loop(u) - loop(v); only strictly positive gains matter.
  std::vector<Rational> shifted;
  shifted.reserve(inst.num_edges());
  for (int i = 0; i < inst.num_edges(); ++i) {
    const Edge& e = inst.edges()[i];
    shifted.push_back(w.edge[i] - w.loop[e.u] - w.loop[e.v]);
  }
  mpz_class scale(1);
  for (const auto& s : shifted)
    if (s > 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                       s.get_den().get_mpz_t());
  std::vector<std::tuple<int, int, long long>> edges;
  mpz_class max_scaled(0);
  for (int i = 0; i < inst.num_edges(); ++i) {
    if (shifted[i] <= 0) continue;
    mpz_class num = shifted[i].get_num() * (scale / shifted[i].get_den());
    max_scaled = std::max(max_scaled, num);
    if (!num.fits_slong_p())
      throw std::invalid_argument(
          "weights too large for the dense backend after integer scaling");
    edges.push_back({inst.edges()[i].u, inst.edges()[i].v, num.get_si()});
  }
  // Labels stay within n * max weight; keep a wide safety margin.
  mpz_class bound = max_scaled * (inst.num_vertices() + 1) * 4;
  if (!bound.fits_slong_p())
    throw std::invalid_argument(
        "weights too large for the dense backend after integer scaling");

  auto res = max_weight_matching_dense(inst.num_vertices(), edges);
  std::vector<Edge> chosen;
  for (auto [u, v] : res.pairs) chosen.push_back({u, v});
  Matching best(std::move(chosen));
  best.validate_for(inst);
  Rational optimum = matching_weight(inst, w, best);
  // Cross-check the decoded value against the solver total.
  Rational loop_total(0);
  for (const auto& lw : w.loop) loop_total += lw;
  Rational from_solver =
      loop_total + make_rational(res.total_weight) / Rational(scale);
  if (optimum != from_solver)
    throw std::logic_error("dense matching backend value mismatch");
  return {best, optimum, SolverBackend::dense};
}

}  // namespace

SolverResult max_weight_perfect_matching(const Instance& inst,
                                         const EdgeWeights& w,
                                         SolverBackend backend,
                                         long long budget) {
  check_weights(inst, w);
  if (backend == SolverBackend::automatic) {
    const long long probe = std::min<long long>(budget, 200'000);
    try {
      count_matchings(inst, probe);
      backend = SolverBackend::exhaustive;
      budget = probe;
    } catch (const BudgetExceeded&) {
      backend = SolverBackend::dense;
    }
  }
  if (backend == SolverBackend::exhaustive)
    return solve_exhaustive(inst, w, budget);
  return solve_dense(inst, w);
}

PopularityCheck popularity_via_solver(const Instance& inst, const Matching& m,
                                      SolverBackend backend,
                                      long long budget) {
  EdgeWeights w = build_popularity_weights(inst, m);
  SolverResult res = max_weight_perfect_matching(inst, w, backend, budget);
  if (res.optimum < 0)
    throw std::logic_error(
        "popularity solver returned a negative optimum; the matching itself "
        "weighs 0");
  PopularityCheck check;
  check.margin = res.optimum;
  check.popular = res.optimum == 0;
  if (!check.popular) {
    // The optimal matching beats m by exactly the optimum.
    long long d = compare(inst, res.matching, m).delta;
    if (make_rational(d) != res.optimum)
      throw std::logic_error("witness margin disagrees with solver optimum");
    check.witness = res.matching;
  }
  return check;
}

Rational wt_score(const Instance& inst, const Matching& m,
                  const UniformMarginals& q) {
  if (q.mode != UniformMarginals::Mode::exact)
    throw std::invalid_argument("wt_score needs exact marginals");
  return matching_weight(inst, build_wt_star(inst, q), m);
}

Rational average_margin(const Instance& inst, const Matching& m,
                        long long budget) {
  m.validate_for(inst);
  auto pm = m.partners(inst.num_vertices());
  long long mu = 0;
  long long total = 0;
  auto visit = [&](const Matching& n) {
    if (++mu > budget) throw BudgetExceeded(budget);
    auto pn = n.partners(inst.num_vertices());
    total += delta_partners(inst, pm, pn);
  };
  for_each_matching(inst, visit);
  return make_rational(total, mu);
}

WeightedWinner weighted_copeland_exact(const Instance& inst, long long budget,
                                       SolverBackend backend) {
  UniformMarginals q = exact_marginals(inst, budget);
  EdgeWeights w = build_wt_star(inst, q);
  SolverResult res = max_weight_perfect_matching(inst, w, backend, budget);
  return {res.matching, res.optimum};
}

UniformMarginals estimate_marginals(const Instance& inst,
                                    const MatchingSampler& sampler,
                                    long long num_samples, int jobs) {
  if (num_samples <= 0)
    throw std::invalid_argument("estimate_marginals needs num_samples >= 1");
  std::vector<long long> edge_count(inst.num_edges(), 0);
  std::vector<long long> matched_count(inst.num_vertices(), 0);
  std::mutex merge_mu;
  parallel_for(num_samples, jobs, [&](long long lo, long long hi) {
    std::vector<long long> le(inst.num_edges(), 0);
    std::vector<long long> lm(inst.num_vertices(), 0);
    for (long long i = lo; i < hi; ++i) {
      Matching m = sampler.draw(static_cast<std::uint64_t>(i));
      for (const Edge& e : m.edges()) {
        le[inst.edge_index(e.u, e.v)] += 1;
        lm[e.u] += 1;
        lm[e.v] += 1;
      }
    }
    std::lock_guard<std::mutex> lock(merge_mu);
    for (size_t i = 0; i < le.size(); ++i) edge_count[i] += le[i];
    for (size_t i = 0; i < lm.size(); ++i) matched_count[i] += lm[i];
  });
  UniformMarginals q;
  q.mode = UniformMarginals::Mode::estimated;
  q.mu = 0;
  for (int e = 0; e < inst.num_edges(); ++e)
    q.edge_coord.push_back(make_rational(edge_count[e], num_samples));
  for (VertexId u = 0; u < inst.num_vertices(); ++u)
    q.loop_coord.push_back(
        make_rational(num_samples - matched_count[u], num_samples));
  return q;
}

long long default_marginal_samples(const Instance& inst,
                                   const Rational& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  const int n = inst.num_vertices();
  const int coords = inst.num_edges() + n;
  if (n == 0 || coords == 0) return 1;
  double eps = epsilon.get_d();
  double raw = 64.0 * n * n * std::log(4.0 * coords * n) / (eps * eps);
  return std::max(1LL, static_cast<long long>(std::ceil(raw)));
}

WeightedWinner weighted_copeland_apx(const Instance& inst,
                                     const ApxConfig& cfg) {
  if (cfg.epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (inst.num_vertices() == 0 || inst.num_edges() == 0)
    return {Matching{}, Rational(0)};
  std::unique_ptr<MatchingSampler> sampler;
  if (cfg.exact_uniform) {
    sampler = std::make_unique<ExactUniformSampler>(inst, cfg.seed, cfg.budget);
  } else {
    SamplerConfig chain = cfg.sampler;
    chain.seed = cfg.seed;
    sampler = std::make_unique<ChainSampler>(inst, chain);
  }
  long long samples = cfg.num_samples > 0
                          ? cfg.num_samples
                          : default_marginal_samples(inst, cfg.epsilon);
  UniformMarginals q = estimate_marginals(inst, *sampler, samples, cfg.jobs);
  EdgeWeights w = build_wt_star(inst, q);
  SolverResult res =
      max_weight_perfect_matching(inst, w, cfg.solver, cfg.budget);
  return {res.matching, res.optimum};
}

}  // namespace copeland
