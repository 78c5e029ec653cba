#pragma once

// Graded cohomology classes of the K3 manifold and the Mukai pairing.
//
// Coordinate conventions, shared by every module and by the JSON schema:
//   index 0      degree-0 coefficient r
//   indices 1-22 degree-2 coordinates in the basis U, U, U, E8(-1), E8(-1)
//                (hyperbolic pairs e_k = 2k+1, f_k = 2k+2 for k = 0,1,2)
//   index 23     degree-4 coefficient s against the fundamental class
// The U Gram block is [[0,1],[1,0]]; the E8(-1) block has -2 on the diagonal
// and 1 exactly on the Dynkin edges in Bourbaki numbering. The degree-0/4
// Mukai block is [[0,-1],[-1,0]]; it is isomorphic to U via f -> -f but that
// change of basis is never applied silently.

#include "mukai/error.hpp"
#include "mukai/linalg.hpp"

#include <type_traits>

namespace mukai {

template <class S>
struct GradedClass {
  S r{};
  Vec22<S> c = Vec22<S>::Zero();
  S s{};

  GradedClass() = default;
  GradedClass(S r_, Vec22<S> c_, S s_)
      : r(std::move(r_)), c(std::move(c_)), s(std::move(s_)) {}

  /// Flavor promotion (Int -> Rat -> CRat).
  template <class T>
    requires(!std::is_same_v<T, S> && std::is_convertible_v<T, S>)
  GradedClass(const GradedClass<T>& o)  // NOLINT(google-explicit-constructor)
      : r(o.r), c(o.c.template cast<S>()), s(o.s) {}

  bool is_zero() const { return r == S{} && s == S{} && c == Vec22<S>::Zero(); }

  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.r == b.r && a.s == b.s && a.c == b.c;
  }
};

using GradedI = GradedClass<Int>;
using GradedQ = GradedClass<Rat>;
using GradedC = GradedClass<CRat>;

/// Gram matrix of the K3 lattice U^3 + E8(-1)^2 on the degree-2 coordinates.
const Mat22i& gram_h2();
/// Gram matrix of the Mukai pairing in the flat coordinate order above.
const Mat24i& gram_mukai();
/// One E8(-1) block (Bourbaki numbering).
const Eigen::Matrix<Int, 8, 8>& gram_e8();

/// <a, b> on degree-2 coordinates (the K3-lattice form).
template <class S>
S pair_h2(const Vec22<S>& a, const Vec22<S>& b);

/// Mukai pairing on flattened 24-vectors.
template <class S>
S pair24(const Vec24<S>& a, const Vec24<S>& b);

/// Mukai pairing <x,y> = x2.y2 - x0*y4 - x4*y0. Bilinear and symmetric.
template <class S>
S mukai_pair(const GradedClass<S>& x, const GradedClass<S>& y) {
  DotAccum<S> acc;
  acc.add(pair_h2<S>(x.c, y.c));
  acc.add(-(x.r * y.s));
  acc.add(-(x.s * y.r));
  return acc.take();
}

template <class A, class B>
  requires(!std::is_same_v<A, B>)
promote_t<A, B> mukai_pair(const GradedClass<A>& x, const GradedClass<B>& y) {
  using S = promote_t<A, B>;
  return mukai_pair(GradedClass<S>(x), GradedClass<S>(y));
}

/// Coordinatewise complex conjugation; the identity on real flavors.
GradedC conjugate(const GradedC& x);
inline const GradedI& conjugate(const GradedI& x) { return x; }
inline const GradedQ& conjugate(const GradedQ& x) { return x; }

template <class S>
Vec24<S> flatten(const GradedClass<S>& x) {
  Vec24<S> v;
  v(0) = x.r;
  v.template segment<kH2Dim>(1) = x.c;
  v(kTotalDim - 1) = x.s;
  return v;
}

template <class S>
GradedClass<S> unflatten(const Vec24<S>& v) {
  return GradedClass<S>(v(0), v.template segment<kH2Dim>(1), v(kTotalDim - 1));
}

template <class S>
GradedClass<S> unflatten(const VecX<S>& v) {
  if (v.size() != kTotalDim)
    throw Error(Errc::BadDimension,
                "unflatten expects 24 coordinates, got " + std::to_string(v.size()));
  return GradedClass<S>(v(0), v.template segment<kH2Dim>(1), v(kTotalDim - 1));
}

/// Degree-2 unit vector (0-based index into the 22 coordinates).
template <class S = Int>
Vec22<S> h2_unit(int i) {
  Vec22<S> v = Vec22<S>::Zero();
  v(i) = S(1);
  return v;
}

/// Indices of the k-th hyperbolic pair inside the 22 degree-2 coordinates.
inline int e_idx(int k) { return 2 * k; }
inline int f_idx(int k) { return 2 * k + 1; }

// -- implementation --

namespace detail {
// Dynkin edges of E8, 0-based within a block, Bourbaki numbering 1..8 with
// edges {1,3},{3,4},{4,5},{5,6},{6,7},{7,8},{2,4}.
inline constexpr int kE8Edges[7][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5},
                                       {5, 6}, {6, 7}, {1, 3}};
}  // namespace detail

template <class S>
S pair_h2(const Vec22<S>& a, const Vec22<S>& b) {
  DotAccum<S> acc;
  for (int k = 0; k < 3; ++k) {
    acc.add(a(e_idx(k)) * b(f_idx(k)));
    acc.add(a(f_idx(k)) * b(e_idx(k)));
  }
  for (int base : {6, 14}) {
    for (int i = 0; i < 8; ++i) {
      S d = a(base + i) * b(base + i);
      acc.add(-(d + d));
    }
    for (const auto& e : detail::kE8Edges) {
      acc.add(a(base + e[0]) * b(base + e[1]));
      acc.add(a(base + e[1]) * b(base + e[0]));
    }
  }
  return acc.take();
}

template <class S>
S pair24(const Vec24<S>& a, const Vec24<S>& b) {
  DotAccum<S> acc;
  acc.add(pair_h2<S>(a.template segment<kH2Dim>(1), b.template segment<kH2Dim>(1)));
  acc.add(-(a(0) * b(23)));
  acc.add(-(a(23) * b(0)));
  return acc.take();
}

}  // namespace mukai
