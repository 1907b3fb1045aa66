#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace copeland {

// All scores, marginals and weights are exact rationals. Half-point ties and
// the mu/2 threshold make floating point unusable here.
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den = 1) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

// Accepts "3", "-3/4" and decimal notation ("0.25", "-1.5").
Rational parse_rational(std::string_view text);

// Canonical "num/den" (or "num" for integers).
std::string to_string(const Rational& q);

}  // namespace copeland
