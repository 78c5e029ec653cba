#pragma once

// Independent brute-force verifiers. These share no computational code with
// the main pairing/lattice paths: expand_pairing carries its own literal
// Gram tables, and the box enumeration tests pairing conditions directly on
// every lattice point of a coordinate box.

#include "mukai/gcy.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace mukai {

/// Progress/cancellation hook for long enumerations: return false to stop.
using ProgressFn = std::function<bool(std::uint64_t done, std::uint64_t total)>;

/// All integer vectors supported on `support` (at most 8 indices) with
/// coordinates in [-n, n] that pair to complex zero with phi. Throws
/// Precondition for n > 3 or more than 8 support indices.
std::vector<Vec24i> box_pairing_kernel(const GcyClass& phi, int n,
                                       std::span<const int> support,
                                       const ProgressFn& progress = {});

/// The Mukai pairing recomputed term by term from its own tables; must agree
/// with mukai_pair everywhere.
template <class S>
S expand_pairing(const GradedClass<S>& x, const GradedClass<S>& y);

/// Verifies an SNF against the classical minor characterization:
/// d1 = gcd of entries and d1*...*dk = gcd of k x k minors. Matrices up to
/// 4 x 4.
bool snf_small_check(const IMat& a);

struct SelftestOptions {
  int box = 2;
  std::uint64_t seed = 0;
  std::ostream* out = nullptr;  // per-gate lines, defaults to std::cout
  ProgressFn progress = {};
};

/// Runs the oracle gates; prints one line per gate and returns true iff all
/// pass. Any disagreement is printed with both values.
bool selftest(const SelftestOptions& options);

// -- implementation --

namespace oracle_detail {
// Independent copy of the lattice conventions: hyperbolic pairs at degree-2
// indices (0,1), (2,3), (4,5); E8(-1) blocks at 6..13 and 14..21 with the
// Bourbaki edge list written out directly.
inline constexpr int kEdges[7][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5},
                                     {5, 6}, {6, 7}, {1, 3}};

template <class S>
S cup_h2(const Vec22<S>& a, const Vec22<S>& b) {
  S total{};
  total = total + a(0) * b(1) + a(1) * b(0);
  total = total + a(2) * b(3) + a(3) * b(2);
  total = total + a(4) * b(5) + a(5) * b(4);
  for (int off : {6, 14}) {
    for (int i = 0; i < 8; ++i) total = total - S(2) * a(off + i) * b(off + i);
    for (const auto& e : kEdges)
      total = total + a(off + e[0]) * b(off + e[1]) + a(off + e[1]) * b(off + e[0]);
  }
  return total;
}
}  // namespace oracle_detail

template <class S>
S expand_pairing(const GradedClass<S>& x, const GradedClass<S>& y) {
  S quad = oracle_detail::cup_h2<S>(x.c, y.c);
  return quad - x.r * y.s - x.s * y.r;
}

}  // namespace mukai
