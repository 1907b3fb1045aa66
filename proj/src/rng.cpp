#include "copeland/rng.hpp"

#include <stdexcept>

namespace copeland {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  if (n == 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t x = eng_();
    if (x < limit) return x % n;
  }
}

bool Rng::bernoulli(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("bernoulli: p outside [0,1]");
  if (!p.get_den().fits_slong_p())
    throw std::invalid_argument("bernoulli: denominator too large");
  const std::uint64_t den = p.get_den().get_ui();
  const std::uint64_t num = p.get_num().get_ui();
  if (num == 0) return false;
  if (num == den) return true;
  return below(den) < num;
}

}  // namespace copeland
