#pragma once

// The hermitian Mukai form H, the symplectic form Omega = Im(H), tangent
// spaces to the extended period domain at a GCY class, and the Lagrangian
// property of the symplectic locus.
//
// The tangent space at phi is modeled as the complement
// {a : <a,phi> = <a,conj(phi)> = 0} rather than the quotient phi-perp / C*phi;
// project_to_tangent maps the quotient picture onto it, and the two agree
// because the projection only subtracts multiples of phi.

#include "mukai/gcy.hpp"

#include <vector>

namespace mukai {

/// H(x,y) = <x, conj(y)>: sesquilinear, hermitian, nondegenerate of
/// signature (4,20) over C.
CRat hermitian_h(const GradedC& x, const GradedC& y);

/// Omega(x,y) = Im H(x,y): real-bilinear, antisymmetric, compatible with i.
Rat omega(const GradedC& x, const GradedC& y);

/// Tangent direction at a GCY class: <alpha,phi> = <alpha,conj(phi)> = 0.
struct TangentVector {
  GradedC alpha;
  GradedC base;

  /// Throws Precondition unless both pairings vanish.
  static TangentVector make(GradedC alpha, const GcyClass& phi);
};

/// Basis of the complex 22-dimensional tangent space at phi, by exact
/// elimination of the two complex-linear conditions.
std::vector<TangentVector> tangent_basis(const GcyClass& phi);

/// v - (<v,conj(phi)> / <phi,conj(phi)>) * phi. Requires <v,phi> = 0; the
/// result satisfies both tangent conditions.
TangentVector project_to_tangent(const GradedC& v, const GcyClass& phi);

/// Tangent image of the symplectic locus at exp(i*w): a -> (0, i*a, -(a.w)).
/// Pairs to zero with exp(i*w).
GradedC sympl_tangent_image(const Vec22q& omega_form, const Vec22q& alpha);

/// Omega vanishes on all pairs of tangent images of the given directions,
/// both raw and projected to the tangent space at exp(i*w).
bool lagrangian_check(const Vec22q& omega_form, const std::vector<Vec22q>& alphas);

/// Gram of the realification of H on C^24 = R^48 (inertia (8,0,40), i.e.
/// hermitian signature (4,20)).
QMat realified_hermitian_gram();

/// Rank of Omega restricted to the realified tangent space at phi
/// (44 = nondegenerate).
int omega_rank_on_tangent(const GcyClass& phi);

}  // namespace mukai
