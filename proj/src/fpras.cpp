#include "copeland/fpras.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "copeland/parallel.hpp"

namespace copeland {

long long fpras_sample_count(int n, const Rational& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (n <= 1) return 1;
  double eps = epsilon.get_d();
  double raw = 32.0 * std::log(static_cast<double>(n)) / (eps * eps);
  return std::max(1LL, static_cast<long long>(std::ceil(raw)));
}

TournamentReport run_fpras(const Instance& inst, const FprasConfig& cfg) {
  const long long k = cfg.k_override
                          ? *cfg.k_override
                          : fpras_sample_count(inst.num_vertices(), cfg.epsilon);
  if (k < 1) throw std::invalid_argument("sample size must be >= 1");
  if (cfg.epsilon <= 0) throw std::invalid_argument("epsilon must be positive");

  std::unique_ptr<MatchingSampler> sampler;
  if (cfg.exact_uniform) {
    sampler = std::make_unique<ExactUniformSampler>(inst, cfg.seed, cfg.budget);
  } else {
    SamplerConfig chain = cfg.sampler;
    chain.seed = cfg.seed;
    sampler = std::make_unique<ChainSampler>(inst, chain);
  }

  TournamentReport report;
  report.k = k;
  report.backend = sampler->describe();
  report.sample0.resize(k);
  report.sample1.resize(k);
  // Stream 0 uses even indices, stream 1 odd ones: independent draws either
  // way, stable under changes to k.
  parallel_for(k, cfg.jobs, [&](long long lo, long long hi) {
    for (long long i = lo; i < hi; ++i) {
      report.sample0[i].matching = sampler->draw(2 * i);
      report.sample1[i].matching = sampler->draw(2 * i + 1);
    }
  });

  // Samples repeat heavily once k exceeds the matching count, so elections
  // are evaluated once per distinct pair and the k^2 table is filled by
  // lookup. Counters come out identical to the direct double loop.
  std::map<Matching, int> distinct;
  std::vector<int> id0(k), id1(k);
  std::vector<std::vector<VertexId>> mates;
  auto intern = [&](const Matching& m) {
    auto [it, inserted] =
        distinct.insert({m, static_cast<int>(distinct.size())});
    if (inserted) mates.push_back(m.partners(inst.num_vertices()));
    return it->second;
  };
  for (long long i = 0; i < k; ++i) {
    id0[i] = intern(report.sample0[i].matching);
    id1[i] = intern(report.sample1[i].matching);
  }
  const int d_count = static_cast<int>(distinct.size());
  std::vector<signed char> sign(static_cast<size_t>(d_count) * d_count, 0);
  parallel_for(d_count, cfg.jobs, [&](long long lo, long long hi) {
    for (long long a = lo; a < hi; ++a)
      for (long long b = 0; b < d_count; ++b) {
        if (a == b) continue;
        long long d = delta_partners(inst, mates[a], mates[b]);
        sign[a * d_count + b] = d > 0 ? 1 : d < 0 ? -1 : 0;
      }
  });

  // A win feeds only the winner's counter; a tie feeds both. Workers own
  // row ranges of sample0 and merge their sample1 counters afterwards
  // (sums, so the partition does not matter).
  std::mutex merge_mu;
  parallel_for(k, cfg.jobs, [&](long long lo, long long hi) {
    std::vector<long long> wins1(k, 0), ties1(k, 0);
    for (long long i = lo; i < hi; ++i) {
      const signed char* row = &sign[static_cast<size_t>(id0[i]) * d_count];
      for (long long j = 0; j < k; ++j) {
        signed char s = row[id1[j]];
        if (s > 0) {
          report.sample0[i].wins += 1;
        } else if (s < 0) {
          wins1[j] += 1;
        } else {
          report.sample0[i].ties += 1;
          ties1[j] += 1;
        }
      }
    }
    std::lock_guard<std::mutex> lock(merge_mu);
    for (long long j = 0; j < k; ++j) {
      report.sample1[j].wins += wins1[j];
      report.sample1[j].ties += ties1[j];
    }
  });

  // Maximizer of wins' + ties'/2; sample0 before sample1, then draw index.
  int best_sample = 0;
  long long best_index = 0;
  long long best_twice = -1;
  for (int side = 0; side < 2; ++side) {
    const auto& entries = side == 0 ? report.sample0 : report.sample1;
    for (long long i = 0; i < k; ++i) {
      if (entries[i].twice_score() > best_twice) {
        best_twice = entries[i].twice_score();
        best_sample = side;
        best_index = i;
      }
    }
  }
  report.winner_sample = best_sample;
  report.winner_index = best_index;
  report.winner = (best_sample == 0 ? report.sample0 : report.sample1)
                      [best_index]
                          .matching;
  report.winner_primed_score = make_rational(best_twice, 2);

  if (!tournament_bound_holds(report))
    throw std::logic_error(
        "tournament winner scored below k/2; counter bookkeeping is broken");
  return report;
}

bool tournament_bound_holds(const TournamentReport& report) {
  // winner_primed_score >= k/2  <=>  2*wins' + ties' >= k
  const auto& entries =
      report.winner_sample == 0 ? report.sample0 : report.sample1;
  return entries[report.winner_index].twice_score() >= report.k;
}

bool tournament_conserved(const TournamentReport& report) {
  long long total = 0;
  for (const auto& e : report.sample0) total += e.twice_score();
  for (const auto& e : report.sample1) total += e.twice_score();
  return total == 2 * report.k * report.k;
}

}  // namespace copeland
