#include "copeland/oracle.hpp"

#include <cstdlib>
#include <mutex>

#include "copeland/parallel.hpp"

namespace copeland {

long long default_enum_budget() {
  if (const char* env = std::getenv("COPELAND_ENUM_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

namespace {

// Pre-order DFS over edges sorted by endpoint indices. `emit` returns false
// to abort the walk.
class MatchingWalker {
 public:
  MatchingWalker(const Instance& inst,
                 std::function<bool(const std::vector<Edge>&)> emit)
      : inst_(inst), emit_(std::move(emit)), used_(inst.num_vertices(), false) {}

  bool run() {
    if (!emit_(current_)) return false;
    return extend(0);
  }

 private:
  bool extend(int from) {
    const auto& edges = inst_.edges();
    for (int i = from; i < static_cast<int>(edges.size()); ++i) {
      const Edge& e = edges[i];
      if (used_[e.u] || used_[e.v]) continue;
      used_[e.u] = used_[e.v] = true;
      current_.push_back(e);
      if (!emit_(current_)) return false;
      if (!extend(i + 1)) return false;
      current_.pop_back();
      used_[e.u] = used_[e.v] = false;
    }
    return true;
  }

  const Instance& inst_;
  std::function<bool(const std::vector<Edge>&)> emit_;
  std::vector<char> used_;
  std::vector<Edge> current_;
};

Matching to_matching(const std::vector<Edge>& edges) {
  return Matching(std::vector<Edge>(edges));
}

}  // namespace

void for_each_matching(const Instance& inst,
                       const std::function<void(const Matching&)>& fn) {
  auto emit = [&](const std::vector<Edge>& edges) {
    fn(to_matching(edges));
    return true;
  };
  MatchingWalker(inst, emit).run();
}

long long count_matchings(const Instance& inst, long long budget) {
  long long count = 0;
  auto emit = [&](const std::vector<Edge>&) {
    ++count;
    return count <= budget;
  };
  if (!MatchingWalker(inst, emit).run()) throw BudgetExceeded(budget);
  return count;
}

std::vector<Matching> enumerate_matchings(const Instance& inst,
                                          long long budget) {
  std::vector<Matching> all;
  auto emit = [&](const std::vector<Edge>& edges) {
    if (static_cast<long long>(all.size()) >= budget) return false;
    all.push_back(to_matching(edges));
    return true;
  };
  if (!MatchingWalker(inst, emit).run()) throw BudgetExceeded(budget);
  return all;
}

namespace {

std::vector<std::vector<VertexId>> partner_arrays(
    const Instance& inst, const std::vector<Matching>& all) {
  std::vector<std::vector<VertexId>> mates;
  mates.reserve(all.size());
  for (const auto& m : all) mates.push_back(m.partners(inst.num_vertices()));
  return mates;
}

}  // namespace

std::vector<ScoreRecord> score_table(const Instance& inst,
                                     const std::vector<Matching>& all,
                                     int jobs) {
  const long long mu = static_cast<long long>(all.size());
  auto mates = partner_arrays(inst, all);
  std::vector<ScoreRecord> table(all.size());

  // Each worker owns rows [lo,hi) and additionally accumulates the mirrored
  // half of each election into a private table; private tables are summed
  // afterwards, so the result is independent of the partition.
  std::vector<std::vector<ScoreRecord>> partial;
  std::mutex partial_mu;
  parallel_for(mu, jobs, [&](long long lo, long long hi) {
    std::vector<ScoreRecord> local(all.size());
    for (long long i = lo; i < hi; ++i) {
      local[i].ties += 1;  // self-tie
      for (long long j = i + 1; j < mu; ++j) {
        long long d = delta_partners(inst, mates[i], mates[j]);
        if (d > 0) {
          local[i].wins += 1;
          local[j].losses += 1;
        } else if (d < 0) {
          local[i].losses += 1;
          local[j].wins += 1;
        } else {
          local[i].ties += 1;
          local[j].ties += 1;
        }
      }
    }
    std::lock_guard<std::mutex> lock(partial_mu);
    partial.push_back(std::move(local));
  });
  for (const auto& local : partial)
    for (size_t i = 0; i < table.size(); ++i) {
      table[i].wins += local[i].wins;
      table[i].ties += local[i].ties;
      table[i].losses += local[i].losses;
    }
  return table;
}

std::vector<int> copeland_winner_indices(const std::vector<ScoreRecord>& table,
                                         const Rational& alpha) {
  std::vector<int> winners;
  Rational best(-1);
  for (int i = 0; i < static_cast<int>(table.size()); ++i) {
    Rational s = table[i].alpha_score(alpha);
    if (winners.empty() || s > best) {
      best = s;
      winners.assign(1, i);
    } else if (s == best) {
      winners.push_back(i);
    }
  }
  return winners;
}

std::vector<int> weak_copeland_winner_indices(
    const std::vector<ScoreRecord>& table) {
  const long long mu = static_cast<long long>(table.size());
  std::vector<int> result;
  for (int i = 0; i < static_cast<int>(table.size()); ++i)
    if (table[i].twice_score() >= mu) result.push_back(i);
  return result;
}

std::vector<Matching> copeland_winners(const Instance& inst,
                                       const Rational& alpha, long long budget,
                                       int jobs) {
  auto all = enumerate_matchings(inst, budget);
  auto table = score_table(inst, all, jobs);
  std::vector<Matching> winners;
  for (int i : copeland_winner_indices(table, alpha)) winners.push_back(all[i]);
  return winners;
}

std::vector<Matching> weak_copeland_winners(const Instance& inst,
                                            long long budget, int jobs) {
  auto all = enumerate_matchings(inst, budget);
  auto table = score_table(inst, all, jobs);
  std::vector<Matching> winners;
  for (int i : weak_copeland_winner_indices(table)) winners.push_back(all[i]);
  return winners;
}

namespace {

// Streams elections of m against every matching; fn receives each delta(m,N).
void stream_deltas(const Instance& inst, const Matching& m, long long budget,
                   const std::function<bool(long long)>& fn) {
  m.validate_for(inst);
  auto pm = m.partners(inst.num_vertices());
  long long count = 0;
  bool aborted_by_budget = false;
  auto emit = [&](const std::vector<Edge>& edges) {
    if (++count > budget) {
      aborted_by_budget = true;
      return false;
    }
    Matching n{std::vector<Edge>(edges)};
    auto pn = n.partners(inst.num_vertices());
    return fn(delta_partners(inst, pm, pn));
  };
  if (!MatchingWalker(inst, emit).run() && aborted_by_budget)
    throw BudgetExceeded(budget);
}

}  // namespace

bool is_popular(const Instance& inst, const Matching& m, long long budget) {
  bool popular = true;
  stream_deltas(inst, m, budget, [&](long long d) {
    if (d < 0) popular = false;
    return popular;
  });
  return popular;
}

long long unpopularity_margin(const Instance& inst, const Matching& m,
                              long long budget) {
  long long margin = 0;  // delta(m, m) = 0 is always present
  stream_deltas(inst, m, budget, [&](long long d) {
    margin = std::max(margin, -d);
    return true;
  });
  return margin;
}

bool is_semi_popular(const Instance& inst, const Matching& m,
                     long long budget) {
  long long mu = 0, undefeated = 0;
  stream_deltas(inst, m, budget, [&](long long d) {
    ++mu;
    if (d >= 0) ++undefeated;
    return true;
  });
  return 2 * undefeated >= mu;
}

bool is_condorcet(const Instance& inst, const Matching& m, long long budget) {
  // Exactly one tie (against itself) and no losses.
  long long ties = 0;
  bool ok = true;
  stream_deltas(inst, m, budget, [&](long long d) {
    if (d < 0) ok = false;
    if (d == 0) ++ties;
    return ok && ties <= 1;
  });
  return ok && ties == 1;
}

bool is_pareto_optimal(const Instance& inst, const Matching& m,
                       long long budget) {
  m.validate_for(inst);
  auto pm = m.partners(inst.num_vertices());
  long long count = 0;
  bool optimal = true;
  bool aborted_by_budget = false;
  auto emit = [&](const std::vector<Edge>& edges) {
    if (++count > budget) {
      aborted_by_budget = true;
      return false;
    }
    Matching n{std::vector<Edge>(edges)};
    auto pn = n.partners(inst.num_vertices());
    bool someone_better = false, someone_worse = false;
    for (VertexId u = 0; u < inst.num_vertices() && !someone_worse; ++u) {
      int v = vote(inst, u, pn[u], pm[u]);
      if (v > 0) someone_better = true;
      if (v < 0) someone_worse = true;
    }
    if (someone_better && !someone_worse) optimal = false;
    return optimal;
  };
  if (!MatchingWalker(inst, emit).run() && aborted_by_budget)
    throw BudgetExceeded(budget);
  return optimal;
}

UniformMarginals exact_marginals(const Instance& inst, long long budget) {
  UniformMarginals q;
  q.mode = UniformMarginals::Mode::exact;
  std::vector<long long> edge_count(inst.num_edges(), 0);
  std::vector<long long> unmatched_count(inst.num_vertices(), 0);
  long long mu = 0;
  auto emit = [&](const std::vector<Edge>& edges) {
    if (mu >= budget) return false;
    ++mu;
    std::vector<char> matched(inst.num_vertices(), 0);
    for (const Edge& e : edges) {
      edge_count[inst.edge_index(e.u, e.v)] += 1;
      matched[e.u] = matched[e.v] = 1;
    }
    for (VertexId u = 0; u < inst.num_vertices(); ++u)
      if (!matched[u]) unmatched_count[u] += 1;
    return true;
  };
  if (!MatchingWalker(inst, emit).run()) throw BudgetExceeded(budget);
  q.mu = mu;
  for (int e = 0; e < inst.num_edges(); ++e)
    q.edge_coord.push_back(make_rational(edge_count[e], mu));
  for (VertexId u = 0; u < inst.num_vertices(); ++u)
    q.loop_coord.push_back(make_rational(unmatched_count[u], mu));
  return q;
}

}  // namespace copeland
