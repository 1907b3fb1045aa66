#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "copeland/sampler.hpp"

using namespace copeland;
using namespace copeland::test;

TEST_CASE("chain steps preserve matching validity") {
  Instance a = fig1a();
  Rng rng(7);
  Matching m;
  for (int i = 0; i < 2000; ++i) {
    m = chain_step(a, m, rng);
    CHECK_NOTHROW(m.validate_for(a));
  }
}

TEST_CASE("forced moves on tiny states") {
  Instance se = single_edge();
  // From empty, a non-lazy step must add the only edge; from the full
  // matching it must remove it.
  Rng rng(1);
  std::set<Matching> seen;
  Matching m;
  for (int i = 0; i < 100; ++i) {
    m = chain_step(se, m, rng);
    seen.insert(m);
  }
  CHECK(seen.size() == 2);  // both states reachable
}

TEST_CASE("slide move rewires the matched endpoint") {
  // Triangle with matching {(1,2)}: drawing edge (2,3) slides to {(2,3)}.
  Instance b = fig1b();
  Matching m12 = by_names(b, {{"1", "2"}});
  Matching m23 = by_names(b, {{"2", "3"}});
  // Drive the chain until it performs this exact transition.
  bool saw_slide = false;
  Rng rng(3);
  Matching m = m12;
  for (int i = 0; i < 5000 && !saw_slide; ++i) {
    Matching next = chain_step(b, m, rng);
    if (m == m12 && next == m23) saw_slide = true;
    m = next;
  }
  CHECK(saw_slide);
}

TEST_CASE(
    "transition matrix is symmetric, stochastic, lazy and uniform-stationary") {
  for (const Instance& inst : {fig1b(), single_edge(), fig1a(), edgeless(2)}) {
    auto check = check_transition_matrix(inst, Rational(1, 2));
    CHECK(check.symmetric);
    CHECK(check.rows_sum_one);
    CHECK(check.lazy_diagonal);
    CHECK(check.uniform_stationary);
  }
  // And for a non-default laziness.
  auto check = check_transition_matrix(fig1b(), Rational(1, 3));
  CHECK(check.ok());
}

TEST_CASE("sampling is deterministic in the seed") {
  Instance a = fig1a();
  SamplerConfig cfg;
  cfg.steps = 50;
  cfg.seed = 99;
  CHECK(sample_matching(a, cfg) == sample_matching(a, cfg));
  auto batch1 = sample_batch(a, cfg, 20);
  auto batch2 = sample_batch(a, cfg, 20, 3);
  CHECK(batch1 == batch2);  // parallel batch reproduces serial
}

TEST_CASE("edgeless instance always samples the empty matching") {
  Instance e = edgeless(4);
  SamplerConfig cfg;
  cfg.steps = 10;
  cfg.seed = 5;
  CHECK(sample_matching(e, cfg) == Matching{});
  CHECK(tv_diagnostic(e, cfg, 100) == Rational(0));
}

TEST_CASE("single edge: one step from empty is exactly uniform") {
  // The two-state lazy chain sends the empty start to each state with
  // probability 1/2 after one step, so the empirical TV reflects sampling
  // noise only.
  Instance se = single_edge();
  SamplerConfig cfg;
  cfg.steps = 1;
  cfg.seed = 11;
  Rational tv = tv_diagnostic(se, cfg, 10000);
  CHECK(tv <= Rational(1, 50));
}

TEST_CASE("triangle chain at moderate length is near uniform") {
  Instance b = fig1b();
  SamplerConfig cfg;
  cfg.steps = 200;
  cfg.seed = 17;
  Rational tv = tv_diagnostic(b, cfg, 100000);
  CHECK(tv <= Rational(1, 50));  // frozen tolerance 0.02
}

TEST_CASE("single edge empirical frequencies are balanced") {
  Instance se = single_edge();
  SamplerConfig cfg;
  cfg.steps = 64;
  cfg.seed = 23;
  auto batch = sample_batch(se, cfg, 10000);
  long long full = 0;
  for (const Matching& m : batch) full += m.size();
  // 0.5 +- 0.02 of 10^4 samples
  CHECK(full >= 4800);
  CHECK(full <= 5200);
}

TEST_CASE("default step count scales with the instance") {
  Instance a = fig1a();
  long long steps = default_chain_steps(a);
  CHECK(steps >= a.num_edges() * a.num_vertices());
  CHECK(default_chain_steps(edgeless(3)) >= 1);
}

TEST_CASE("exact uniform sampler hits every matching with the right rate") {
  Instance b = fig1b();
  ExactUniformSampler sampler(b, 31);
  std::map<Matching, int> counts;
  const int n = 40000;
  for (int i = 0; i < n; ++i) counts[sampler.draw(i)] += 1;
  CHECK(counts.size() == 4);
  for (const auto& [m, c] : counts) {
    CHECK(c > n / 4 - 600);
    CHECK(c < n / 4 + 600);
  }
}

TEST_CASE("laziness outside (0,1) is rejected") {
  Instance b = fig1b();
  SamplerConfig cfg;
  cfg.laziness = Rational(1);
  CHECK_THROWS_AS(sample_matching(b, cfg), std::invalid_argument);
  cfg.laziness = Rational(0);
  CHECK_THROWS_AS(sample_matching(b, cfg), std::invalid_argument);
}
