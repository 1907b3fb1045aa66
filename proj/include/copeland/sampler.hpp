#pragma once

#include <memory>
#include <string>

#include "copeland/oracle.hpp"
#include "copeland/rng.hpp"

namespace copeland {

// Lazy single-site chain over matchings: with probability `laziness` stay
// put, otherwise draw a uniform edge and add / remove / slide. Symmetric on
// its move graph, so the uniform distribution is stationary.
struct SamplerConfig {
  long long steps = 0;  // 0 = default_chain_steps()
  std::uint64_t seed = 0;
  Rational laziness = Rational(1, 2);
};

// ceil(10 * |E| * |V| * ln(1/delta_target)); no mixing guarantee is claimed,
// tv_diagnostic is the empirical check.
long long default_chain_steps(const Instance& inst, double delta_target = 0.01);

// One transition. Always returns a valid matching.
Matching chain_step(const Instance& inst, const Matching& m, Rng& rng);

// Runs the chain from the empty matching for cfg.steps steps.
Matching sample_matching(const Instance& inst, const SamplerConfig& cfg);

// count independent samples; sample i uses seed mix_seed(cfg.seed, i), so a
// parallel batch reproduces a serial one.
std::vector<Matching> sample_batch(const Instance& inst,
                                   const SamplerConfig& cfg, long long count,
                                   int jobs = 1);

// Empirical total-variation distance between the sampled distribution and
// the exact uniform distribution over all matchings.
Rational tv_diagnostic(const Instance& inst, const SamplerConfig& cfg,
                       long long num_samples,
                       long long budget = default_enum_budget(), int jobs = 1);

// Exact single-step transition matrix checks over the enumerated state
// space: entrywise symmetry, stochastic rows, lazy diagonal, and uniform
// stationarity.
struct TransitionCheck {
  long long mu = 0;
  bool symmetric = false;
  bool rows_sum_one = false;
  bool lazy_diagonal = false;
  bool uniform_stationary = false;
  bool ok() const {
    return symmetric && rows_sum_one && lazy_diagonal && uniform_stationary;
  }
};

TransitionCheck check_transition_matrix(const Instance& inst,
                                        const Rational& laziness,
                                        long long budget =
                                            default_enum_budget());

// Sampling backend for the tournament and for marginal estimation. draw() is
// a pure function of (configured seed, index).
class MatchingSampler {
 public:
  virtual ~MatchingSampler() = default;
  virtual Matching draw(std::uint64_t index) const = 0;
  virtual std::string describe() const = 0;
};

class ChainSampler final : public MatchingSampler {
 public:
  ChainSampler(const Instance& inst, SamplerConfig cfg);
  Matching draw(std::uint64_t index) const override;
  std::string describe() const override;

 private:
  const Instance& inst_;
  SamplerConfig cfg_;
};

// Draws uniformly from the enumerated matching list: a zero-error backend
// that isolates algorithmic behavior from sampling error.
class ExactUniformSampler final : public MatchingSampler {
 public:
  ExactUniformSampler(const Instance& inst, std::uint64_t seed,
                      long long budget = default_enum_budget());
  Matching draw(std::uint64_t index) const override;
  std::string describe() const override;

 private:
  std::vector<Matching> all_;
  std::uint64_t seed_;
};

}  // namespace copeland
