#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace brank {

// Exact scalar. mpq_class keeps values canonical (lowest terms, positive
// denominator), so equality is structural.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with decimal integer parts. Throws
// std::invalid_argument on anything else (including q == 0).
Rational rat_from_string(const std::string& s);

// Canonical encoding: "p" or "p/q", q > 1.
std::string rat_to_string(const Rational& q);

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// splitmix64; self-contained so seeded runs are reproducible across
// standard libraries.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }
};

}  // namespace brank
