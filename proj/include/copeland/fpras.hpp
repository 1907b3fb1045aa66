#pragma once

#include <optional>

#include "copeland/sampler.hpp"

namespace copeland {

struct FprasConfig {
  Rational epsilon = Rational(1, 4);
  std::optional<long long> k_override;
  bool exact_uniform = false;  // otherwise the chain sampler is used
  SamplerConfig sampler;       // chain knobs; sampler.seed is ignored
  std::uint64_t seed = 0;      // drives both sample streams
  long long budget = default_enum_budget();  // exact-uniform enumeration
  int jobs = 1;
};

// k = ceil(32 ln n / eps^2), clamped to 1 for n <= 1.
long long fpras_sample_count(int n, const Rational& epsilon);

struct TournamentEntry {
  Matching matching;
  long long wins = 0;  // wins' against the opposite sample
  long long ties = 0;  // ties' against the opposite sample
  long long twice_score() const { return 2 * wins + ties; }
};

struct TournamentReport {
  long long k = 0;
  std::vector<TournamentEntry> sample0;
  std::vector<TournamentEntry> sample1;
  int winner_sample = 0;
  long long winner_index = 0;
  Matching winner;
  Rational winner_primed_score;  // wins' + ties'/2
  std::string backend;
};

// The sampling tournament: two independent k-samples, all k^2 cross
// elections, return the maximizer of wins' + ties'/2 (ties broken by sample
// then draw index). Throws std::logic_error if the winner's primed score
// falls below k/2 — that bound holds unconditionally.
TournamentReport run_fpras(const Instance& inst, const FprasConfig& cfg);

// winner_primed_score >= k/2.
bool tournament_bound_holds(const TournamentReport& report);

// Every election splits one point across the two sides:
// sum over both samples of (wins' + ties'/2) == k^2.
bool tournament_conserved(const TournamentReport& report);

}  // namespace copeland
