#pragma once

#include "copeland/sampler.hpp"
#include "copeland/weights.hpp"

namespace copeland {

enum class SolverBackend {
  automatic,   // exhaustive when a cheap counting probe fits, else dense
  exhaustive,  // enumeration; canonical tie-break (fewest edges, then lex)
  dense        // polynomial blossom on shifted integer weights
};

struct SolverResult {
  Matching matching;
  Rational optimum;  // weight of the self-loop completion of `matching`
  SolverBackend used = SolverBackend::exhaustive;
};

// Maximum-weight perfect matching on the self-loop-augmented graph:
// maximizes sum of edge weights of M plus loop weights of unmatched
// vertices. Exact for arbitrary rational weights. The dense backend reduces
// to ordinary maximum-weight matching on shifted weights
// edge(u,v) - loop(u) - loop(v); odd-set constraints never materialize.
SolverResult max_weight_perfect_matching(
    const Instance& inst, const EdgeWeights& w,
    SolverBackend backend = SolverBackend::automatic,
    long long budget = default_enum_budget());

struct PopularityCheck {
  bool popular = false;
  Rational margin;              // max over N of delta(N, m); 0 iff popular
  std::optional<Matching> witness;  // a matching defeating m, when not popular
};

// Popularity test without enumeration of elections: m is popular iff the
// maximum popularity-weight of a completed matching is 0. Doubles as the
// unpopularity margin.
PopularityCheck popularity_via_solver(
    const Instance& inst, const Matching& m,
    SolverBackend backend = SolverBackend::automatic,
    long long budget = default_enum_budget());

// Average margin of m against all matchings, as the weight of m's completion
// under exact wt*. q must be exact.
Rational wt_score(const Instance& inst, const Matching& m,
                  const UniformMarginals& q);

// Independent route to the same value: sum of delta(m, N) over all N,
// divided by the matching count.
Rational average_margin(const Instance& inst, const Matching& m,
                        long long budget = default_enum_budget());

struct WeightedWinner {
  Matching matching;
  Rational score;  // its wt-score (exact or estimated per the route)
};

WeightedWinner weighted_copeland_exact(
    const Instance& inst, long long budget = default_enum_budget(),
    SolverBackend backend = SolverBackend::automatic);

// Per-coordinate sample frequencies of the uniform mixture: edge containment
// and vertex-unmatched frequencies over num_samples draws.
UniformMarginals estimate_marginals(const Instance& inst,
                                    const MatchingSampler& sampler,
                                    long long num_samples, int jobs = 1);

// ceil(64 n^2 ln(4 (|E|+|V|) n) / eps^2).
long long default_marginal_samples(const Instance& inst,
                                   const Rational& epsilon);

struct ApxConfig {
  Rational epsilon = Rational(1, 4);
  long long num_samples = 0;  // 0 = default_marginal_samples
  bool exact_uniform = false;
  SamplerConfig sampler;
  std::uint64_t seed = 0;
  int jobs = 1;
  SolverBackend solver = SolverBackend::automatic;
  long long budget = default_enum_budget();
};

// Estimates the uniform marginals, builds the estimated weight function and
// solves it. The returned score is the estimated one; compare against exact
// wt_score on enumerable instances.
WeightedWinner weighted_copeland_apx(const Instance& inst,
                                     const ApxConfig& cfg);

}  // namespace copeland
