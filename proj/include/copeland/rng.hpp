#pragma once

#include <cstdint>
#include <random>

#include "copeland/rational.hpp"

namespace copeland {

// Derives the seed for an independent stream (sample index, trial index, ...)
// from a base seed. splitmix64 finalizer; stateless, so parallel batches
// reproduce serial ones.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// mt19937_64 is fully specified by the standard; the bounded draws below avoid
// std::uniform_int_distribution on purpose, so streams are identical across
// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n). n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

  // True with probability exactly p (0 <= p <= 1, denominator < 2^63).
  bool bernoulli(const Rational& p);

 private:
  std::mt19937_64 eng_;
};

}  // namespace copeland
