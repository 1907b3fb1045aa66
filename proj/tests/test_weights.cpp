#include "doctest.h"
#include "support.hpp"

#include "copeland/solver.hpp"
#include "copeland/weights.hpp"

using namespace copeland;
using namespace copeland::test;

TEST_CASE("wt* on the single edge") {
  Instance se = single_edge();
  auto q = exact_marginals(se, 100);
  auto w = build_wt_star(se, q);
  CHECK(w.edge[0] == Rational(1));
  CHECK(w.loop[0] == Rational(-1, 2));
  CHECK(w.loop[1] == Rational(-1, 2));
  CHECK(w.kind == WeightKind::wt_star_exact);
}

TEST_CASE("wt* loop weight of an isolated vertex is zero") {
  Instance lone = edgeless(1);
  auto w = build_wt_star(lone, exact_marginals(lone, 10));
  CHECK(w.loop[0] == Rational(0));
}

TEST_CASE("wt-score equals the direct average margin everywhere") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = random_instance(6, Rational(1, 2), 3, seed + 321);
    auto q = exact_marginals(inst, default_enum_budget());
    for (const Matching& m : enumerate_matchings(inst, default_enum_budget())) {
      CHECK(wt_score(inst, m, q) == average_margin(inst, m));
    }
  }
}

TEST_CASE("single-edge wt-scores") {
  Instance se = single_edge();
  auto q = exact_marginals(se, 100);
  Matching edge({Edge{0, 1}});
  CHECK(wt_score(se, edge, q) == Rational(1));
  CHECK(wt_score(se, Matching{}, q) == Rational(-1));
  CHECK(average_margin(se, edge) == Rational(1));
  CHECK(average_margin(se, Matching{}) == Rational(-1));
}

TEST_CASE("popularity weights: values and the zero-sum identity") {
  Instance se = single_edge();
  auto w = build_popularity_weights(se, Matching{});
  CHECK(w.edge[0] == Rational(2));  // both endpoints prefer each other to self
  CHECK(w.loop[0] == Rational(0));
  CHECK(w.loop[1] == Rational(0));

  Instance a = fig1a();
  Matching m = by_names(a, {{"a", "d"}, {"b", "c"}});
  auto wa = build_popularity_weights(a, m);
  int ac = a.edge_index(*a.find_vertex("a"), *a.find_vertex("c"));
  CHECK(wa.edge[ac] == Rational(2));  // a: c over d; c: a over b

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst = random_instance(6, Rational(1, 2), 3, seed);
    for (const Matching& mm : enumerate_matchings(inst, 100000)) {
      auto ww = build_popularity_weights(inst, mm);
      CHECK(matching_weight(inst, ww, mm) == Rational(0));
      for (const auto& ew : ww.edge) {
        CHECK(ew >= Rational(-2));
        CHECK(ew <= Rational(2));
      }
      for (const auto& lw : ww.loop) {
        CHECK(lw >= Rational(-1));
        CHECK(lw <= Rational(0));
      }
    }
  }
}

TEST_CASE("verify_dual rejects the all-zero certificate on the triangle") {
  Instance b = fig1b();
  Matching m12 = by_names(b, {{"1", "2"}});
  DualCertificate cert;
  cert.y.assign(3, 0);
  auto check = verify_dual(b, m12, cert);
  CHECK_FALSE(check.feasible);
  CHECK(check.zero_sum);
  REQUIRE(check.first_violation.has_value());
  // The (2,3) edge has weight +2 > 0 = y_2 + y_3.
  CHECK(b.name(check.first_violation->u) == "2");
  CHECK(b.name(check.first_violation->v) == "3");
}

TEST_CASE("verify_dual accepts a valid certificate and reports slacks") {
  // Single edge with the matching {uv}: y = (1, -1) is feasible with zero
  // sum: the matched edge is tight and both loops are covered.
  Instance se = single_edge();
  Matching m({Edge{0, 1}});
  DualCertificate cert;
  cert.y = {1, -1};
  auto check = verify_dual(se, m, cert);
  CHECK(check.certified());
  CHECK(check.objective == 0);
  REQUIRE(check.edge_slack.size() == 1);
  CHECK(check.edge_slack[0] == 0);
}

TEST_CASE("empty instance accepts the empty certificate vacuously") {
  Instance e = parse_instance("instance v1\n");
  auto check = verify_dual(e, Matching{}, DualCertificate{});
  CHECK(check.certified());
}

TEST_CASE("certified popularity is sound against the enumeration oracle") {
  // Wherever verify_dual certifies a matching, the exhaustive check agrees.
  int certified = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Instance inst = random_instance(5, Rational(3, 5), 2, seed + 50);
    auto all = enumerate_matchings(inst, 100000);
    for (const Matching& m : all) {
      // Try a crude certificate: y = 0 everywhere. It certifies only
      // matchings whose popularity weights are all nonpositive.
      DualCertificate cert;
      cert.y.assign(inst.num_vertices(), 0);
      auto check = verify_dual(inst, m, cert);
      if (check.certified()) {
        ++certified;
        CHECK(is_popular(inst, m, default_enum_budget()));
      }
    }
  }
  CHECK(certified > 0);
}

TEST_CASE("dimension mismatches are rejected") {
  Instance se = single_edge();
  DualCertificate cert;
  cert.y = {0};
  CHECK_THROWS_AS(verify_dual(se, Matching{}, cert), std::invalid_argument);
  UniformMarginals q;  // empty
  CHECK_THROWS_AS(build_wt_star(se, q), std::invalid_argument);
}
