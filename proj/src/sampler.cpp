#include "copeland/sampler.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "copeland/parallel.hpp"

namespace copeland {

long long default_chain_steps(const Instance& inst, double delta_target) {
  if (delta_target <= 0 || delta_target >= 1)
    throw std::invalid_argument("delta_target must be in (0,1)");
  double raw = 10.0 * inst.num_edges() * inst.num_vertices() *
               std::log(1.0 / delta_target);
  return std::max(1LL, static_cast<long long>(std::ceil(raw)));
}

namespace {

void check_laziness(const Rational& laziness) {
  if (laziness <= 0 || laziness >= 1)
    throw std::invalid_argument("laziness must be in (0,1)");
}

// Laziness probability as raw numerator/denominator, extracted once per walk
// so the per-step draw stays a plain bounded integer comparison.
struct LazyOdds {
  std::uint64_t num, den;
  explicit LazyOdds(const Rational& laziness) {
    check_laziness(laziness);
    if (!laziness.get_den().fits_slong_p())
      throw std::invalid_argument("laziness denominator too large");
    num = laziness.get_num().get_ui();
    den = laziness.get_den().get_ui();
  }
};

// In-place transition on a partner array.
void step_partners(const Instance& inst, std::vector<VertexId>& mate,
                   const LazyOdds& laziness, Rng& rng) {
  if (inst.num_edges() == 0) return;
  if (rng.below(laziness.den) < laziness.num) return;
  const Edge& e =
      inst.edges()[rng.below(static_cast<std::uint64_t>(inst.num_edges()))];
  VertexId u = e.u, v = e.v;
  if (mate[u] == v) {  // remove
    mate[u] = kSelf;
    mate[v] = kSelf;
  } else if (mate[u] == kSelf && mate[v] == kSelf) {  // add
    mate[u] = v;
    mate[v] = u;
  } else if (mate[u] != kSelf && mate[v] == kSelf) {  // slide off u's partner
    mate[mate[u]] = kSelf;
    mate[u] = v;
    mate[v] = u;
  } else if (mate[v] != kSelf && mate[u] == kSelf) {
    mate[mate[v]] = kSelf;
    mate[v] = u;
    mate[u] = v;
  }
  // both endpoints matched elsewhere: stay
}

Matching matching_from_partners(const std::vector<VertexId>& mate) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < static_cast<VertexId>(mate.size()); ++u)
    if (mate[u] != kSelf && u < mate[u]) edges.push_back({u, mate[u]});
  return Matching(std::move(edges));
}

}  // namespace

Matching chain_step(const Instance& inst, const Matching& m, Rng& rng) {
  m.validate_for(inst);
  auto mate = m.partners(inst.num_vertices());
  step_partners(inst, mate, LazyOdds(Rational(1, 2)), rng);
  return matching_from_partners(mate);
}

Matching sample_matching(const Instance& inst, const SamplerConfig& cfg) {
  LazyOdds laziness(cfg.laziness);
  long long steps = cfg.steps > 0 ? cfg.steps : default_chain_steps(inst);
  Rng rng(cfg.seed);
  std::vector<VertexId> mate(inst.num_vertices(), kSelf);
  for (long long i = 0; i < steps; ++i)
    step_partners(inst, mate, laziness, rng);
  return matching_from_partners(mate);
}

std::vector<Matching> sample_batch(const Instance& inst,
                                   const SamplerConfig& cfg, long long count,
                                   int jobs) {
  std::vector<Matching> out(count);
  parallel_for(count, jobs, [&](long long lo, long long hi) {
    for (long long i = lo; i < hi; ++i) {
      SamplerConfig derived = cfg;
      derived.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(i));
      out[i] = sample_matching(inst, derived);
    }
  });
  return out;
}

Rational tv_diagnostic(const Instance& inst, const SamplerConfig& cfg,
                       long long num_samples, long long budget, int jobs) {
  if (num_samples <= 0)
    throw std::invalid_argument("tv_diagnostic needs num_samples >= 1");
  auto all = enumerate_matchings(inst, budget);
  std::map<Matching, int> index;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) index[all[i]] = i;

  std::vector<long long> counts(all.size(), 0);
  std::mutex merge_mu;
  parallel_for(num_samples, jobs, [&](long long lo, long long hi) {
    std::vector<long long> local(all.size(), 0);
    for (long long i = lo; i < hi; ++i) {
      SamplerConfig derived = cfg;
      derived.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(i));
      local[index.at(sample_matching(inst, derived))] += 1;
    }
    std::lock_guard<std::mutex> lock(merge_mu);
    for (size_t k = 0; k < counts.size(); ++k) counts[k] += local[k];
  });

  const long long mu = static_cast<long long>(all.size());
  Rational tv(0);
  for (long long c : counts) {
    Rational diff = make_rational(c, num_samples) - make_rational(1, mu);
    tv += abs(diff);
  }
  // Missing mass of never-seen matchings is already included: their diff is
  // exactly -1/mu and the loop above covers every enumerated matching.
  return tv / 2;
}

TransitionCheck check_transition_matrix(const Instance& inst,
                                        const Rational& laziness,
                                        long long budget) {
  check_laziness(laziness);
  auto all = enumerate_matchings(inst, budget);
  const int mu = static_cast<int>(all.size());
  std::map<Matching, int> index;
  for (int i = 0; i < mu; ++i) index[all[i]] = i;

  const int m_edges = inst.num_edges();
  std::vector<std::vector<Rational>> p(mu, std::vector<Rational>(mu, 0));
  const Rational move_prob =
      m_edges == 0 ? Rational(0) : (Rational(1) - laziness) / m_edges;
  for (int i = 0; i < mu; ++i) {
    p[i][i] += laziness;
    if (m_edges == 0) {
      p[i][i] = 1;
      continue;
    }
    auto mate = all[i].partners(inst.num_vertices());
    for (const Edge& e : inst.edges()) {
      auto next = mate;
      // mirror of step_partners for a forced edge draw
      VertexId u = e.u, v = e.v;
      if (next[u] == v) {
        next[u] = next[v] = kSelf;
      } else if (next[u] == kSelf && next[v] == kSelf) {
        next[u] = v;
        next[v] = u;
      } else if (next[u] != kSelf && next[v] == kSelf) {
        next[next[u]] = kSelf;
        next[u] = v;
        next[v] = u;
      } else if (next[v] != kSelf && next[u] == kSelf) {
        next[next[v]] = kSelf;
        next[v] = u;
        next[u] = v;
      }
      p[i][index.at(matching_from_partners(next))] += move_prob;
    }
  }

  TransitionCheck check;
  check.mu = mu;
  check.symmetric = true;
  check.rows_sum_one = true;
  check.lazy_diagonal = true;
  check.uniform_stationary = true;
  for (int i = 0; i < mu; ++i) {
    Rational row(0), col(0);
    for (int j = 0; j < mu; ++j) {
      row += p[i][j];
      col += p[j][i];
      if (i != j && p[i][j] != p[j][i]) check.symmetric = false;
    }
    if (row != 1) check.rows_sum_one = false;
    if (col != 1) check.uniform_stationary = false;
    if (p[i][i] < laziness) check.lazy_diagonal = false;
  }
  return check;
}

ChainSampler::ChainSampler(const Instance& inst, SamplerConfig cfg)
    : inst_(inst), cfg_(cfg) {
  check_laziness(cfg_.laziness);
  if (cfg_.steps <= 0) cfg_.steps = default_chain_steps(inst);
}

Matching ChainSampler::draw(std::uint64_t index) const {
  SamplerConfig derived = cfg_;
  derived.seed = mix_seed(cfg_.seed, index);
  return sample_matching(inst_, derived);
}

std::string ChainSampler::describe() const {
  return "mcmc(steps=" + std::to_string(cfg_.steps) +
         ",laziness=" + to_string(cfg_.laziness) + ")";
}

ExactUniformSampler::ExactUniformSampler(const Instance& inst,
                                         std::uint64_t seed, long long budget)
    : all_(enumerate_matchings(inst, budget)), seed_(seed) {}

Matching ExactUniformSampler::draw(std::uint64_t index) const {
  // Rejection over iterated mixes: exactly uniform, deterministic, and
  // cheap enough for millions of draws (no engine to seed per draw).
  const std::uint64_t mu = all_.size();
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % mu;
  std::uint64_t x = mix_seed(seed_, index);
  for (std::uint64_t salt = 1; x >= limit; ++salt) x = mix_seed(x, salt);
  return all_[x % mu];
}

std::string ExactUniformSampler::describe() const {
  return "exact-uniform(mu=" + std::to_string(all_.size()) + ")";
}

}  // namespace copeland
