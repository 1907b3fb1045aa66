#pragma once

#include <functional>
#include <vector>

#include "copeland/election.hpp"
#include "copeland/matching.hpp"

namespace copeland {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(long long budget)
      : std::runtime_error("matching enumeration budget of " +
                           std::to_string(budget) + " exceeded"),
        budget(budget) {}
  long long budget;
};

// Default enumeration guard; COPELAND_ENUM_BUDGET overrides.
long long default_enum_budget();

// Streams every matching exactly once, in lexicographic order of sorted edge
// index sequences (empty matching first). Pre-order DFS, so the order is the
// canonical tie-break order everywhere else.
void for_each_matching(const Instance& inst,
                       const std::function<void(const Matching&)>& fn);

// Counts matchings, aborting with BudgetExceeded beyond `budget`.
long long count_matchings(const Instance& inst, long long budget);

std::vector<Matching> enumerate_matchings(const Instance& inst,
                                          long long budget);

// One head-to-head row of the full tournament.
struct ScoreRecord {
  long long wins = 0;
  long long ties = 0;  // includes the self-tie
  long long losses = 0;
  long long mu() const { return wins + ties + losses; }
  // wins + ties/2, exactly. twice_score avoids rationals in hot paths.
  long long twice_score() const { return 2 * wins + ties; }
  Rational score() const { return make_rational(twice_score(), 2); }
  // wins + alpha * ties for alpha in [0,1].
  Rational alpha_score(const Rational& alpha) const {
    return make_rational(wins) + alpha * make_rational(ties);
  }
};

// Exact ScoreRecord for every enumerated matching; sum of scores is mu^2/2.
std::vector<ScoreRecord> score_table(const Instance& inst,
                                     const std::vector<Matching>& all,
                                     int jobs = 1);

// Indices (in enumeration order) of the argmax set of alpha_score.
std::vector<int> copeland_winner_indices(const std::vector<ScoreRecord>& table,
                                         const Rational& alpha);
// Indices with score >= mu/2; never empty.
std::vector<int> weak_copeland_winner_indices(
    const std::vector<ScoreRecord>& table);

std::vector<Matching> copeland_winners(const Instance& inst,
                                       const Rational& alpha = Rational(1, 2),
                                       long long budget = default_enum_budget(),
                                       int jobs = 1);
std::vector<Matching> weak_copeland_winners(
    const Instance& inst, long long budget = default_enum_budget(),
    int jobs = 1);

// Exhaustive definitions: each streams over all matchings N.
bool is_popular(const Instance& inst, const Matching& m,
                long long budget = default_enum_budget());
// max_N delta(N, m); 0 exactly when m is popular.
long long unpopularity_margin(const Instance& inst, const Matching& m,
                              long long budget = default_enum_budget());
// delta(m, N) >= 0 for at least half of all matchings N.
bool is_semi_popular(const Instance& inst, const Matching& m,
                     long long budget = default_enum_budget());
// delta(m, N) > 0 for every N != m.
bool is_condorcet(const Instance& inst, const Matching& m,
                  long long budget = default_enum_budget());
// No N making some vertex better off and none worse off.
bool is_pareto_optimal(const Instance& inst, const Matching& m,
                       long long budget = default_enum_budget());

// Coordinates of the uniform mixture over all matchings: per edge the
// fraction of matchings containing it, per vertex the fraction leaving it
// unmatched. Exact mode carries mu; estimated mode holds sample frequencies.
struct UniformMarginals {
  enum class Mode { exact, estimated };
  Mode mode = Mode::exact;
  long long mu = 0;                 // 0 when estimated
  std::vector<Rational> edge_coord;  // by edge index
  std::vector<Rational> loop_coord;  // by vertex id
};

UniformMarginals exact_marginals(const Instance& inst,
                                 long long budget = default_enum_budget());

}  // namespace copeland
