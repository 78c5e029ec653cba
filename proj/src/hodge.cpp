#include "mukai/hodge.hpp"

#include <algorithm>

namespace mukai {

Sublattice pic(const GcyClass& phi) {
  PositivePlane p = plane_of(phi);
  QMat forms(2, kTotalDim);
  forms.row(0) = (gram_mukai().cast<Rat>() * p.u).transpose();
  forms.row(1) = (gram_mukai().cast<Rat>() * p.v).transpose();
  return integer_kernel(forms);
}

Sublattice transcendental(const GcyClass& phi) { return orth_complement(pic(phi)); }

bool is_type_11(const GradedI& delta, const GcyClass& phi) {
  return mukai_pair(GradedC(delta), phi.cls()).is_zero();
}

HodgeData HodgeData::of(const GcyClass& phi) {
  Sublattice p = mukai::pic(phi);
  Sublattice t = orth_complement(p);
  return HodgeData{phi, std::move(p), std::move(t)};
}

namespace {

const Sublattice& h2_block() {
  static const Sublattice l = [] {
    IMat rows(kH2Dim, kTotalDim);
    rows.setZero();
    for (int i = 0; i < kH2Dim; ++i) rows(i, 1 + i) = Int(1);
    return Sublattice::from_rows(rows);
  }();
  return l;
}

}  // namespace

Sublattice classical_tx(const Vec22c& sigma) {
  GcyClass untwisted = GcyClass::validate(sigma_class(sigma));
  return intersect(transcendental(untwisted), h2_block());
}

Int brauer_order(const Vec22q& b, const Vec22c& sigma) {
  Vec22q u, v;
  for (int i = 0; i < kH2Dim; ++i) {
    u(i) = sigma(i).real();
    v(i) = sigma(i).imag();
  }
  // Image lattice {(l.u, l.v) : l in Z^22} inside Q^2, scaled integral.
  Vec22q gu, gv;
  {
    Mat22i g = gram_h2();
    QMat gq = g.cast<Rat>();
    gu = gq * u;
    gv = gq * v;
  }
  Int scale(1);
  for (int i = 0; i < kH2Dim; ++i) {
    scale = lcm(scale, gu(i).den());
    scale = lcm(scale, gv(i).den());
  }
  IMat image(kH2Dim, 2);
  for (int i = 0; i < kH2Dim; ++i) {
    image(i, 0) = gu(i).num() * (scale / gu(i).den());
    image(i, 1) = gv(i).num() * (scale / gv(i).den());
  }
  auto h = hnf(image);
  if (h.rank != 2) throw Error(Errc::Internal, "degenerate period image lattice");

  // r*(B.u, B.v) lies in the image lattice iff the rational coordinates of
  // (B.u, B.v) against the triangular HNF basis become integral at r, so the
  // minimal r is the lcm of their denominators. The valid r form a subgroup
  // of Z containing N (N*B is integral), hence the result divides N.
  Rat t0 = pair_h2<Rat>(b, u) * Rat(scale);
  Rat t1 = pair_h2<Rat>(b, v) * Rat(scale);
  const Rat a = Rat(h.h(0, 0));
  const Rat c = Rat(h.h(0, 1));
  const Rat d = Rat(h.h(1, 1));
  Rat y0 = t0 / a;
  Rat y1 = (t1 - y0 * c) / d;
  Int r = lcm(y0.den(), y1.den());

  Int n(1);
  for (int i = 0; i < kH2Dim; ++i) n = lcm(n, b(i).den());
  if (!Int::divmod(n, r).second.is_zero())
    throw Error(Errc::Internal, "Brauer order does not divide the denominator lcm");
  return r;
}

Sublattice twisted_transcendental(const Sublattice& tx, const Vec22q& b) {
  const int k = tx.rank();
  if (k == 0) return tx;
  for (int i = 0; i < k; ++i)
    if (!tx.basis()(i, 0).is_zero() || !tx.basis()(i, kTotalDim - 1).is_zero())
      throw Error(Errc::Precondition, "twisted_transcendental expects tx inside degree 2");
  // Values g_i.B = p_i / q with a common denominator q; the kernel of
  // x -> sum x_i p_i mod q comes from an integer kernel with one extra
  // variable for the multiple of q.
  VecX<Rat> vals(k);
  Int q(1);
  for (int i = 0; i < k; ++i) {
    Vec22q row = tx.basis().row(i).segment<kH2Dim>(1).cast<Rat>().transpose();
    vals(i) = pair_h2<Rat>(row, b);
    q = lcm(q, vals(i).den());
  }
  IMat congruence(1, k + 1);
  for (int i = 0; i < k; ++i) congruence(0, i) = vals(i).num() * (q / vals(i).den());
  congruence(0, k) = q;
  IMat ker = integer_kernel_rows(congruence);  // rows (x, y), x the coefficients
  IMat rows(ker.rows(), kTotalDim);
  for (int i = 0; i < ker.rows(); ++i) {
    Eigen::Matrix<Int, 1, kTotalDim> acc;
    acc.setZero();
    for (int j = 0; j < k; ++j)
      if (!ker(i, j).is_zero()) acc += ker(i, j) * tx.basis().row(j);
    rows.row(i) = acc;
  }
  return Sublattice::from_rows(rows);
}

GradedI eta(const Vec22i& gamma, const Vec22q& b) {
  Rat gb = pair_h2<Rat>(gamma.cast<Rat>(), b);
  if (!gb.is_integer())
    throw Error(Errc::NonIntegralImage,
                "gamma.B = " + gb.to_string() + " is not an integer");
  return GradedI(Int(0), gamma, gb.num());
}

BrauerData BrauerData::of(const Vec22c& sigma, const Vec22q& b) {
  BrauerData out{sigma, b, Int(0), Sublattice::zero(), Sublattice::zero()};
  out.order_r = brauer_order(b, sigma);
  out.tx = classical_tx(sigma);
  out.tx_twisted = twisted_transcendental(out.tx, b);
  return out;
}

EtaReport verify_eta_hodge_isometry(const Vec22c& sigma, const Vec22q& b) {
  EtaReport rep;
  BrauerData data = BrauerData::of(sigma, b);
  rep.r = data.order_r;
  rep.index = sublattice_index(data.tx, data.tx_twisted);

  GcyClass phi = GcyClass::validate(bfield_transform(b, sigma_class(sigma)));
  Sublattice t_phi = transcendental(phi);

  // eta image of T(X, alpha_B), canonicalized.
  const int k = data.tx_twisted.rank();
  IMat image(k, kTotalDim);
  for (int i = 0; i < k; ++i) {
    Vec22i gamma = data.tx_twisted.basis().row(i).segment<kH2Dim>(1).transpose();
    image.row(i) = flatten(eta(gamma, b)).transpose();
  }
  Sublattice eta_image = Sublattice::from_rows(image);
  rep.eta_bijective = eta_image == t_phi;

  // Gram agreement on corresponding bases.
  bool gram_ok = true;
  for (int i = 0; i < k && gram_ok; ++i)
    for (int j = 0; j < k && gram_ok; ++j) {
      Int lhs = pair24<Int>(data.tx_twisted.basis().row(i).transpose(),
                            data.tx_twisted.basis().row(j).transpose());
      Int rhs = pair24<Int>(image.row(i).transpose(), image.row(j).transpose());
      gram_ok = lhs == rhs;
    }
  rep.isometry = gram_ok;

  // Hodge side: exp(B) sigma is phi itself (complex scaling allowed), and
  // Pic(phi) is of pure type (1,1).
  GradedC eta_sigma = bfield_transform(b, sigma_class(sigma));
  bool scal = false;
  {
    Vec24c a = flatten(eta_sigma);
    Vec24c p = flatten(phi.cls());
    scal = true;
    for (int i = 0; i < kTotalDim && scal; ++i)
      for (int j = i + 1; j < kTotalDim && scal; ++j)
        scal = a(i) * p(j) == a(j) * p(i);
  }
  bool pic11 = true;
  Sublattice pc = pic(phi);
  for (int i = 0; i < pc.rank() && pic11; ++i)
    pic11 = is_type_11(unflatten(Vec24i(pc.basis().row(i).transpose())), phi);
  rep.hodge = scal && pic11;
  return rep;
}

namespace {

bool colinear(const Vec24c& a, const Vec24c& b) {
  bool a_zero = true;
  for (int i = 0; i < kTotalDim; ++i)
    if (!a(i).is_zero()) {
      a_zero = false;
      break;
    }
  if (a_zero) return false;
  for (int i = 0; i < kTotalDim; ++i)
    for (int j = i + 1; j < kTotalDim; ++j)
      if (a(i) * b(j) != a(j) * b(i)) return false;
  return true;
}

}  // namespace

bool is_hodge_isometry(const Isometry& g, const GcyClass& phi, const GcyClass& phi_prime,
                       bool orientation_sensitive) {
  Vec24c moved = flatten(g.apply(phi.cls()));
  Vec24c target = flatten(phi_prime.cls());
  if (colinear(moved, target)) return true;
  if (orientation_sensitive) return false;
  Vec24c conj_target = flatten(conjugate(phi_prime.cls()));
  return colinear(moved, conj_target);
}

}  // namespace mukai
