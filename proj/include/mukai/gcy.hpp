#pragma once

// Generalized Calabi-Yau classes at cohomology level: validation, B-field
// transforms, normal forms, positive planes, generalized K3 pairs, the
// four-space of a pair and its classical reduction.
//
// Everything here works on classes, not forms: the pointwise conditions of
// the differential-geometric picture are implemented as the corresponding
// exact conditions on cohomology classes, which is the strongest statement
// checkable in this setting.

#include "mukai/lattice.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace mukai {

/// <x, conj(x)>, checked real. Real for every Gaussian-rational class; a
/// non-real value signals an internal error.
Rat pairing_norm(const GradedC& x);

/// A Gaussian-rational class with <phi,phi> = 0 and <phi,conj(phi)> > 0,
/// together with its cached norm. Constructed only through validate().
class GcyClass {
 public:
  /// Throws IsotropyViolation or PositivityViolation naming the failed
  /// condition.
  static GcyClass validate(const GradedC& x);

  const GradedC& cls() const { return phi_; }
  const Rat& norm() const { return norm_; }

  friend bool operator==(const GcyClass& a, const GcyClass& b) {
    return a.phi_ == b.phi_;
  }

 private:
  GcyClass(GradedC phi, Rat norm) : phi_(std::move(phi)), norm_(std::move(norm)) {}
  GradedC phi_;
  Rat norm_;
};

/// exp(B).x = (r, c + r*B, s + B.c + r*B^2/2). An isometry of the Mukai
/// pairing for every real B, so it maps GCY classes to GCY classes.
template <class S>
GradedClass<promote_t<S, Rat>> bfield_transform(const Vec22q& b, const GradedClass<S>& x);

GcyClass bfield_transform(const Vec22q& b, const GcyClass& phi);

/// B^2/2-free building helpers.
GradedC exp_i_omega(const Vec22q& omega);                   // (1, i*w, -w^2/2)
GradedC exp_b_i_omega(const Vec22q& b, const Vec22q& omega);  // exp(B)*exp(i*w)
GradedC sigma_class(const Vec22c& sigma);                   // (0, sigma, 0)

/// Normal forms: lambda * exp(B + i*omega) when the degree-0 part is
/// nonzero, exp(B) * sigma otherwise.
struct SymplecticForm {
  CRat lambda;
  Vec22q b_field;
  Vec22q omega;
  friend bool operator==(const SymplecticForm&, const SymplecticForm&) = default;
};
struct ComplexForm {
  Vec22c sigma;
  Vec22q b_field;
  friend bool operator==(const ComplexForm&, const ComplexForm&) = default;
};
using NormalForm = std::variant<SymplecticForm, ComplexForm>;

/// Splits a GCY class into its normal form. For the complex type the B-field
/// is normalized to the canonical choice supported on the plane of sigma
/// (B = l*conj(sigma) + conj(l)*sigma with l = s/(sigma.conj(sigma))), which
/// makes the decomposition deterministic; in general B is unique only up to
/// a real (1,1) part.
NormalForm classify(const GcyClass& phi);

/// Inverse of classify; classify-then-rebuild is the exact identity.
GcyClass rebuild(const NormalForm& nf);

/// Oriented positive 2-plane spanned by (u, v) with <u,v> = 0 and
/// u^2 = ratio_d * v^2 > 0: the plane of u + i*t*v with t^2 = ratio_d.
/// ratio_d = 1 for planes of Gaussian-rational classes; other values carry
/// planes whose isotropic generator needs a quadratic irrationality, kept
/// symbolic so that all arithmetic stays rational.
struct PositivePlane {
  Vec24q u;
  Vec24q v;
  Rat ratio_d;

  /// Orthogonalizes v against u and validates positivity.
  static PositivePlane from_span(const Vec24q& u, const Vec24q& v);

  friend bool operator==(const PositivePlane&, const PositivePlane&) = default;
};

/// P_phi: u = Re phi, v = Im phi, ratio_d = 1.
PositivePlane plane_of(const GcyClass& phi);

PositivePlane bfield_transform(const Vec22q& b, const PositivePlane& p);

/// All four cross pairings <u,u'>, <u,v'>, <v,u'>, <v,v'> vanish.
bool planes_orthogonal(const PositivePlane& p, const PositivePlane& q);

/// The four orthogonality pairings of the planes of exp(i*w) and
/// exp(B' + i*w'), in the order above. Expanding them symbolically gives
/// ((w^2 + w'^2 - B'^2)/2, -B'.w', B'.w, w.w'), which the tests pin down.
std::array<Rat, 4> sympl_orthogonality_system(const Vec22q& omega, const Vec22q& b_prime,
                                              const Vec22q& omega_prime);

/// A hyperkaehler pair: orthogonal planes and equal norms.
class GK3Pair {
 public:
  /// Throws NotOrthogonal or NormMismatch naming the failed condition.
  static GK3Pair make(GcyClass phi, GcyClass phi_prime);

  const GcyClass& phi() const { return phi_; }
  const GcyClass& phi_prime() const { return phi_prime_; }

 private:
  GK3Pair(GcyClass a, GcyClass b) : phi_(std::move(a)), phi_prime_(std::move(b)) {}
  GcyClass phi_, phi_prime_;
};

bool is_hk_pair(const GcyClass& phi, const GcyClass& phi_prime);

/// Oriented positive four-space spanned by four rational vectors; the Gram
/// matrix under the Mukai pairing has exact inertia (4,0,0).
class FourSpace {
 public:
  using Rows = Eigen::Matrix<Rat, 4, kTotalDim>;

  /// Throws NotPositive unless the span is positive definite of rank 4.
  static FourSpace from_rows(Rows rows);

  const Rows& rows() const { return rows_; }

  /// Equality as rational subspaces (row-space comparison).
  bool same_span(const FourSpace& other) const;

 private:
  explicit FourSpace(Rows rows) : rows_(std::move(rows)) {}
  Rows rows_;
};

/// Pi spanned by (u, v, u', v') of the two planes.
FourSpace four_space(const GK3Pair& pair);

FourSpace bfield_transform(const Vec22q& b, const FourSpace& pi);

/// Reduction of a generalized-K3 four-space to exp(B') of a classical one:
/// a positive plane H inside span(Pi) and pure degree 2, its orthogonal
/// complement inside Pi, the extracted B-field, and, when the H-plane ratio
/// is a perfect rational square, an explicit isotropic generator sigma.
struct ClassicalReduction {
  PositivePlane h_plane;
  Vec22q b_prime;
  PositivePlane complement;
  std::optional<Vec22c> sigma;
  /// Guard for a complement with no degree-0 component. Provably unreachable
  /// with H chosen inside pure degree 2 (the Mukai form on H2+H4 has positive
  /// rank 3, so the whole Pi would have to fit there); kept as a documented
  /// branch instead of an assertion.
  bool complement_complex_type = false;
};

ClassicalReduction classical_reduction(const FourSpace& pi);

enum class GcyKind { Symplectic, Complex };

/// Deterministic random GCY class: symplectic kind is lambda*exp(B + i*w)
/// with w^2 > 0 by construction from hyperbolic pairs; complex kind starts
/// from u + i*v with u, v orthogonal of equal positive square inside the
/// hyperbolic blocks, then gets moved by reflections in degree-2 (-2)-classes
/// and by B-fields. Every output passes validate, and the degree-0 part is
/// nonzero exactly for the symplectic kind.
GcyClass random_gcy(std::uint64_t seed, GcyKind kind, int size_bound);

// -- implementation --

template <class S>
GradedClass<promote_t<S, Rat>> bfield_transform(const Vec22q& b, const GradedClass<S>& x) {
  using T = promote_t<S, Rat>;
  GradedClass<T> in(x);
  Vec22<T> bt = b.cast<T>();
  GradedClass<T> out;
  out.r = in.r;
  out.c = in.c + in.r * bt;
  T bb = pair_h2<T>(bt, in.c);
  T b2 = pair_h2<T>(bt, bt);
  out.s = in.s + bb + in.r * b2 / T(2);
  return out;
}

}  // namespace mukai
