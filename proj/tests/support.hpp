#pragma once

#include <random>
#include <string>

#include "tiltwall/chern_lattice.hpp"
#include "tiltwall/rational.hpp"

namespace testing {

using tiltwall::HChern;
using tiltwall::Rational;

inline Rational R(const char* text) { return Rational::parse(text); }
inline HChern P3(const char* text) { return HChern::parse(text, tiltwall::Space::p3()); }

/// Seeded generator; every suite starts from the same state so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 20240611) : eng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// num/den with |num| <= span and den in 1..max_den.
  Rational rational(long span = 40, long max_den = 12) {
    return Rational(integer(-span, span), integer(1, max_den));
  }

  Rational nonzero(long span = 40, long max_den = 12) {
    while (true) {
      Rational r = rational(span, max_den);
      if (!r.is_zero()) return r;
    }
  }

  /// Lattice point of P^3: e0, e1 in Z, e2 in Z/2, e3 in Z/6.
  HChern lattice_p3(long span = 6) {
    return HChern::p3(integer(-span, span), integer(-2 * span, 2 * span), Rational(integer(-4 * span, 4 * span), 2),
                      Rational(integer(-12 * span, 12 * span), 6));
  }

  HChern rational_p3() { return HChern::p3(rational(), rational(), rational(), rational()); }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace testing
