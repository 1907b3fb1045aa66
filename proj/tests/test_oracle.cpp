#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "copeland/oracle.hpp"

using namespace copeland;
using namespace copeland::test;

TEST_CASE("enumeration agrees with the independent subset filter") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = random_instance(7, Rational(2, 5), 3, seed);
    auto fast = enumerate_matchings(inst, default_enum_budget());
    auto brute = brute_matchings(inst);
    std::sort(brute.begin(), brute.end());
    std::vector<Matching> sorted = fast;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(sorted == brute);
    // No duplicates and empty-first ordering.
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(fast.front() == Matching{});
  }
}

TEST_CASE("known matching counts") {
  CHECK(count_matchings(fig1b(), 100) == 4);
  CHECK(count_matchings(single_edge(), 100) == 2);
  CHECK(count_matchings(fig1c(), 100) == 34);  // 1 + 9 + 18 + 6
  CHECK(count_matchings(fig1a(), 100) == 10);  // K4: 1 + 6 + 3
  CHECK(count_matchings(edgeless(5), 100) == 1);
}

TEST_CASE("enumeration budget guard") {
  CHECK_THROWS_AS(count_matchings(fig1c(), 10), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_matchings(fig1c(), 33), BudgetExceeded);
  CHECK_NOTHROW(enumerate_matchings(fig1c(), 34));
}

TEST_CASE("score table of the cyclic triangle") {
  Instance b = fig1b();
  auto all = enumerate_matchings(b, 100);
  auto table = score_table(b, all);
  REQUIRE(all.size() == 4);
  for (size_t i = 0; i < all.size(); ++i) {
    if (all[i].size() == 0)
      CHECK(table[i].score() == Rational(1, 2));
    else
      CHECK(table[i].score() == Rational(5, 2));
    CHECK(table[i].mu() == 4);
  }
}

TEST_CASE("single edge scores") {
  Instance se = single_edge();
  auto all = enumerate_matchings(se, 100);
  auto table = score_table(se, all);
  REQUIRE(all.size() == 2);
  CHECK(table[0].score() == Rational(1, 2));  // empty matching
  CHECK(table[1].score() == Rational(3, 2));
}

TEST_CASE("score table total is mu^2/2 and parallel runs agree") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Instance inst = random_instance(7, Rational(3, 5), 2, seed + 10);
    auto all = enumerate_matchings(inst, default_enum_budget());
    auto table = score_table(inst, all);
    long long mu = static_cast<long long>(all.size());
    long long twice_total = 0;
    for (const auto& rec : table) twice_total += rec.twice_score();
    CHECK(twice_total == mu * mu);
    auto table4 = score_table(inst, all, 4);
    for (size_t i = 0; i < table.size(); ++i) {
      CHECK(table[i].wins == table4[i].wins);
      CHECK(table[i].ties == table4[i].ties);
      CHECK(table[i].losses == table4[i].losses);
    }
  }
}

TEST_CASE("alpha scores are monotone in alpha and recover the half rule") {
  ScoreRecord rec{5, 3, 2};
  CHECK(rec.alpha_score(Rational(1, 2)) == rec.score());
  Rational prev(-1);
  for (int num = 0; num <= 4; ++num) {
    Rational a(num, 4);
    Rational s = rec.alpha_score(a);
    CHECK(s >= prev);
    prev = s;
  }
  CHECK(rec.alpha_score(Rational(0)) == Rational(5));
  CHECK(rec.alpha_score(Rational(1)) == Rational(8));
}

TEST_CASE("copeland winners of the cyclic triangle are the three edges") {
  Instance b = fig1b();
  auto winners = copeland_winners(b);
  REQUIRE(winners.size() == 3);
  for (const Matching& w : winners) CHECK(w.size() == 1);
  auto weak = weak_copeland_winners(b);
  CHECK(weak == winners);  // 5/2 >= 2; the empty matching misses
}

TEST_CASE("single edge: the edge dominates") {
  Instance se = single_edge();
  auto winners = copeland_winners(se);
  REQUIRE(winners.size() == 1);
  CHECK(winners[0].size() == 1);
  auto weak = weak_copeland_winners(se);
  REQUIRE(weak.size() == 1);  // 3/2 >= 1 but 1/2 < 1
  CHECK(weak[0] == winners[0]);
  CHECK(is_condorcet(se, winners[0], 100));
  CHECK_FALSE(is_condorcet(se, Matching{}, 100));
}

TEST_CASE("four-agent instance: popular set and winner set") {
  Instance a = fig1a();
  Matching m1 = by_names(a, {{"a", "d"}, {"b", "c"}});
  Matching m2 = by_names(a, {{"a", "c"}, {"b", "d"}});
  CHECK(is_popular(a, m1, 100));
  CHECK(is_popular(a, m2, 100));
  int popular_count = 0;
  for (const Matching& m : enumerate_matchings(a, 100))
    if (is_popular(a, m, 100)) ++popular_count;
  CHECK(popular_count == 2);

  // Hand tally over all ten matchings: {(a,d),(b,c)} wins 7 and ties 3
  // (score 17/2); {(a,c),(b,d)} wins 6 and ties 4 (score 8). So the argmax
  // is m1 alone, while both popular matchings are weak winners.
  auto winners = copeland_winners(a);
  REQUIRE(winners.size() == 1);
  CHECK(winners[0] == m1);
  auto weak = weak_copeland_winners(a);
  CHECK(std::find(weak.begin(), weak.end(), m1) != weak.end());
  CHECK(std::find(weak.begin(), weak.end(), m2) != weak.end());
}

TEST_CASE("no popular matching in the cyclic triangle or the tied bipartite") {
  for (Instance inst : {fig1b(), fig1c()}) {
    for (const Matching& m : enumerate_matchings(inst, 100))
      CHECK_FALSE(is_popular(inst, m, 100));
  }
}

TEST_CASE("unpopularity margin is zero exactly for popular matchings") {
  Instance b = fig1b();
  CHECK(unpopularity_margin(b, by_names(b, {{"1", "2"}}), 100) == 1);
  CHECK(unpopularity_margin(b, Matching{}, 100) == 2);
  Instance a = fig1a();
  CHECK(unpopularity_margin(a, by_names(a, {{"a", "d"}, {"b", "c"}}), 100) ==
        0);
}

TEST_CASE("containment chain: popular => weak copeland => semi-popular") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = random_instance(6, Rational(1, 2), 3, seed + 77);
    auto all = enumerate_matchings(inst, default_enum_budget());
    auto table = score_table(inst, all);
    long long mu = static_cast<long long>(all.size());
    for (size_t i = 0; i < all.size(); ++i) {
      bool popular = is_popular(inst, all[i], default_enum_budget());
      bool weak = table[i].twice_score() >= mu;
      bool semi = is_semi_popular(inst, all[i], default_enum_budget());
      if (popular) CHECK(weak);
      if (weak) CHECK(semi);
    }
  }
}

TEST_CASE("pareto optimality by exhaustive comparison") {
  Instance b = fig1b();
  CHECK_FALSE(is_pareto_optimal(b, Matching{}, 100));
  CHECK(is_pareto_optimal(b, by_names(b, {{"1", "2"}}), 100));
}

TEST_CASE("exact marginals: single edge, triangle, isolated vertex") {
  Instance se = single_edge();
  auto q = exact_marginals(se, 100);
  CHECK(q.mu == 2);
  CHECK(q.edge_coord[0] == Rational(1, 2));
  CHECK(q.loop_coord[0] == Rational(1, 2));
  CHECK(q.loop_coord[1] == Rational(1, 2));

  Instance b = fig1b();
  auto qb = exact_marginals(b, 100);
  CHECK(qb.mu == 4);
  for (const auto& ec : qb.edge_coord) CHECK(ec == Rational(1, 4));
  for (const auto& lc : qb.loop_coord) CHECK(lc == Rational(1, 2));

  Instance lone = edgeless(1);
  auto ql = exact_marginals(lone, 100);
  CHECK(ql.mu == 1);
  CHECK(ql.loop_coord[0] == Rational(1));
}

TEST_CASE("exact marginals satisfy the per-vertex simplex identity") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst = random_instance(7, Rational(1, 2), 3, seed + 5);
    auto q = exact_marginals(inst, default_enum_budget());
    for (VertexId u = 0; u < inst.num_vertices(); ++u) {
      Rational total = q.loop_coord[u];
      for (VertexId v : inst.neighbors(u))
        total += q.edge_coord[inst.edge_index(u, v)];
      CHECK(total == Rational(1));
    }
  }
}

TEST_CASE("weak copeland winners always exist on random instances") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance inst = random_instance(6, Rational(3, 10), 3, seed);
    CHECK_FALSE(weak_copeland_winners(inst).empty());
  }
}
