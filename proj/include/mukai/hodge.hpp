#pragma once

// Hodge-theoretic lattices of a GCY class: Picard group, transcendental
// lattice, Brauer order of a rational B-field, twisted transcendental
// lattice, the eta embedding, and Hodge-isometry predicates.

#include "mukai/gcy.hpp"

namespace mukai {

/// Pic(phi) = {d in Z^24 : <d, phi> = 0}: the saturated integer kernel of
/// the two real conditions <., Re phi> = <., Im phi> = 0.
Sublattice pic(const GcyClass& phi);

/// T(phi) = orthogonal complement of Pic(phi) in Z^24; saturated.
Sublattice transcendental(const GcyClass& phi);

/// <delta, phi> = 0 as a complex number.
bool is_type_11(const GradedI& delta, const GcyClass& phi);

struct HodgeData {
  GcyClass phi;
  Sublattice pic;
  Sublattice transc;
  static HodgeData of(const GcyClass& phi);
};

/// T(X) of a complex-type period sigma: the transcendental lattice of the
/// untwisted class (0, sigma, 0), cut down to the degree-2 block.
Sublattice classical_tx(const Vec22c& sigma);

/// Minimal r >= 1 with r*B in Z^22 + (real (1,1) part for sigma), decided by
/// membership of (r*B.u, r*B.v) in the image lattice {(l.u, l.v) : l in Z^22}.
/// The valid r form a subgroup of Z containing the lcm N of B's coordinate
/// denominators (N*B is integral), so the minimum divides N and the search
/// runs over divisors of N in increasing order.
Int brauer_order(const Vec22q& b, const Vec22c& sigma);

/// {g in tx : g.B in Z}, the kernel of tx -> Q/Z. Finite index in tx.
Sublattice twisted_transcendental(const Sublattice& tx, const Vec22q& b);

/// eta(g) = (0, g, g.B), the restriction of exp(B) to degree 2. Throws
/// NonIntegralImage when g.B is not an integer.
GradedI eta(const Vec22i& gamma, const Vec22q& b);

struct BrauerData {
  Vec22c sigma;
  Vec22q b_field;
  Int order_r;
  Sublattice tx;
  Sublattice tx_twisted;
  static BrauerData of(const Vec22c& sigma, const Vec22q& b);
};

/// Checks that eta identifies T(X, alpha_B) with T(exp(B) sigma):
///   eta_bijective  image lattice equals T(phi) as canonical HNF matrices
///   isometry       Gram matrices agree under eta, entrywise
///   hodge          exp(B) sigma spans the (2,0)-line of phi and every
///                  Pic(phi) basis vector pairs to complex zero with phi
/// plus the Brauer order r and the index [T(X) : T(X, alpha_B)].
struct EtaReport {
  bool eta_bijective = false;
  bool isometry = false;
  bool hodge = false;
  Int index;
  Int r;
  bool ok() const { return eta_bijective && isometry && hodge; }
};
EtaReport verify_eta_hodge_isometry(const Vec22c& sigma, const Vec22q& b);

/// g carries the period of phi to the period of phi_prime: g(phi) lies in
/// C* . phi_prime. For isotropic positive classes this is exactly equality
/// of the oriented planes, and over Gaussian-rational data the scalar is
/// itself Gaussian rational, so the test is exact colinearity. With
/// orientation_sensitive = false, colinearity with the conjugate (the same
/// plane with reversed orientation) is accepted as well.
bool is_hodge_isometry(const Isometry& g, const GcyClass& phi, const GcyClass& phi_prime,
                       bool orientation_sensitive = true);

}  // namespace mukai
