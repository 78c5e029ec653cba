#pragma once

#include "mukai/scalar.hpp"

#include <cstdint>
#include <random>

namespace mukai {

/// Deterministic random source. mt19937_64 output is fixed by the standard,
/// and all derived draws below avoid std::uniform_int_distribution (whose
/// algorithm is implementation-defined), so streams are identical across
/// platforms and runs for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, n), n > 0, via rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform integer in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (gen_() & 1u) != 0; }

  /// Numerator in [-bound, bound], denominator in [1, bound].
  Rat rat(long long bound) {
    return Rat(Int(range(-bound, bound)), Int(range(1, bound)));
  }

  /// Nonzero variant.
  Rat rat_nonzero(long long bound) {
    for (;;) {
      Rat r = rat(bound);
      if (!r.is_zero()) return r;
    }
  }

  CRat crat(long long bound) { return CRat(rat(bound), rat(bound)); }

  CRat crat_nonzero(long long bound) {
    for (;;) {
      CRat z = crat(bound);
      if (!z.is_zero()) return z;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mukai
