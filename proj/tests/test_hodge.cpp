#include "mukai/hodge.hpp"
#include "mukai/oracle.hpp"
#include "mukai/rng.hpp"

#include <doctest.h>

using namespace mukai;

namespace {

Vec22c standard_sigma() {
  Vec22c s = Vec22c::Zero();
  s(e_idx(0)) = CRat(1);
  s(f_idx(0)) = CRat(1);
  s(e_idx(1)) = crat_i();
  s(f_idx(1)) = crat_i();
  return s;
}

Vec22q hyperbolic_omega(int k) {
  Vec22q w = Vec22q::Zero();
  w(e_idx(k)) = Rat(1);
  w(f_idx(k)) = Rat(1);
  return w;
}

Vec22q scaled_unit(int i, long long num, long long den) {
  Vec22q v = Vec22q::Zero();
  v(i) = Rat(Int(num), Int(den));
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("hodge");

TEST_CASE("picard lattice of a sigma-type class") {
  GcyClass psi = GcyClass::validate(sigma_class(standard_sigma()));
  Sublattice p = pic(psi);
  CHECK(p.rank() == 22);
  CHECK(p.saturated());

  // H0 and H4 generators are type (1,1)
  Vec24i h0 = Vec24i::Zero();
  h0(0) = Int(1);
  Vec24i h4 = Vec24i::Zero();
  h4(23) = Int(1);
  CHECK(p.contains(h0));
  CHECK(p.contains(h4));
  CHECK(is_type_11(unflatten(h4), psi));

  // every basis vector pairs to complex zero with psi
  for (int i = 0; i < p.rank(); ++i)
    CHECK(is_type_11(unflatten(Vec24i(p.basis().row(i).transpose())), psi));

  Sublattice t = transcendental(psi);
  CHECK(t.rank() == 2);
  Vec24i uu = Vec24i::Zero();
  uu(1) = Int(1);
  uu(2) = Int(1);
  Vec24i vv = Vec24i::Zero();
  vv(3) = Int(1);
  vv(4) = Int(1);
  CHECK(t.contains(uu));
  CHECK(t.contains(vv));
}

TEST_CASE("picard lattice of exp(i omega), omega = e1 + f1") {
  GcyClass phi = GcyClass::validate(exp_i_omega(hyperbolic_omega(0)));
  Sublattice p = pic(phi);
  CHECK(p.rank() == 22);

  // delta_0 = delta_4 condition for the degree-0/4 part
  Vec24i both = Vec24i::Zero();
  both(0) = Int(1);
  both(23) = Int(1);
  CHECK(p.contains(both));
  Vec24i h0 = Vec24i::Zero();
  h0(0) = Int(1);
  CHECK_FALSE(p.contains(h0));

  // the omega-perpendicular part of degree 2 (rank 21) is inside
  Vec24i perp = Vec24i::Zero();
  perp(1) = Int(1);
  perp(2) = Int(-1);
  CHECK(p.contains(perp));
  Vec24i e3 = Vec24i::Zero();
  e3(5) = Int(1);
  CHECK(p.contains(e3));

  // scaling phi leaves pic unchanged
  GradedC scaled(CRat(Rat(2), Rat(3)) * phi.cls().r, CRat(Rat(2), Rat(3)) * phi.cls().c,
                 CRat(Rat(2), Rat(3)) * phi.cls().s);
  CHECK(pic(GcyClass::validate(scaled)) == p);
}

TEST_CASE("pic and transcendental decompose the rank" * doctest::timeout(600)) {
  Rng rng(301);
  for (int t = 0; t < 300; ++t) {
    GcyKind kind = t % 2 ? GcyKind::Complex : GcyKind::Symplectic;
    GcyClass g = random_gcy(rng.next(), kind, 5);
    HodgeData data = HodgeData::of(g);
    CHECK(data.pic.rank() + data.transc.rank() == kTotalDim);
    CHECK(orth_complement(data.pic) == data.transc);
    for (int i = 0; i < data.pic.rank(); ++i)
      CHECK(is_type_11(unflatten(Vec24i(data.pic.basis().row(i).transpose())), g));
  }
}

TEST_CASE("box oracle agrees with pic on the small supports") {
  GcyClass psi = GcyClass::validate(sigma_class(standard_sigma()));
  Sublattice p = pic(psi);
  std::vector<int> support = {0, 1, 2, 3, 23};
  auto found = box_pairing_kernel(psi, 2, support);
  for (const auto& v : found) CHECK(p.contains(v));
  // and conversely every pic point of that box shows up
  std::size_t members = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d)
          for (int e = -2; e <= 2; ++e) {
            Vec24i v = Vec24i::Zero();
            v(0) = Int(a);
            v(1) = Int(b);
            v(2) = Int(c);
            v(3) = Int(d);
            v(23) = Int(e);
            if (p.contains(v)) ++members;
          }
  CHECK(members == found.size());
}

TEST_CASE("brauer order") {
  Vec22c sigma = standard_sigma();

  // integral B-fields induce the trivial class
  CHECK(brauer_order(scaled_unit(e_idx(0), 5, 1), sigma) == Int(1));

  // f3/2 pairs to zero with both Re and Im sigma: it is a real (1,1) class,
  // so the induced Brauer class is trivial as well
  CHECK(brauer_order(scaled_unit(f_idx(2), 1, 2), sigma) == Int(1));

  // genuinely twisted examples
  CHECK(brauer_order(scaled_unit(e_idx(0), 1, 2), sigma) == Int(2));
  CHECK(brauer_order(scaled_unit(e_idx(0), 1, 3), sigma) == Int(3));
  Vec22q quarters = scaled_unit(e_idx(0), 1, 4) + scaled_unit(e_idx(1), 1, 4);
  CHECK(brauer_order(quarters, sigma) == Int(4));
  // a (1,1) shift does not change the order
  CHECK(brauer_order(Vec22q(quarters + scaled_unit(f_idx(2), 1, 2)), sigma) == Int(4));
}

TEST_CASE("twisted transcendental lattice") {
  Vec22c sigma = standard_sigma();
  Sublattice tx = classical_tx(sigma);
  CHECK(tx.rank() == 2);

  // integral B leaves tx unchanged
  CHECK(twisted_transcendental(tx, scaled_unit(e_idx(0), 3, 1)) == tx);

  // B = e1/2 cuts index 2
  Sublattice tw = twisted_transcendental(tx, scaled_unit(e_idx(0), 1, 2));
  CHECK(sublattice_index(tx, tw) == Int(2));
  // 2(e1+f1) is in, e1+f1 is not
  Vec24i u2 = Vec24i::Zero();
  u2(1) = Int(2);
  u2(2) = Int(2);
  Vec24i u1 = Vec24i::Zero();
  u1(1) = Int(1);
  u1(2) = Int(1);
  CHECK(tw.contains(u2));
  CHECK_FALSE(tw.contains(u1));

  // index divides the Brauer order for the acceptance family
  for (long long den : {2, 3, 4, 5, 6}) {
    Vec22q b = scaled_unit(e_idx(0), 1, den);
    Int r = brauer_order(b, sigma);
    Int index = sublattice_index(tx, twisted_transcendental(tx, b));
    CHECK(Int::divmod(r, index).second.is_zero());
  }
}

TEST_CASE("brauer data bundles the twist invariants") {
  Vec22c sigma = standard_sigma();
  BrauerData data = BrauerData::of(sigma, scaled_unit(e_idx(0), 1, 2));
  CHECK(data.order_r == Int(2));
  CHECK(data.tx.rank() == 2);
  CHECK(sublattice_index(data.tx, data.tx_twisted) == Int(2));
  for (int i = 0; i < data.tx_twisted.rank(); ++i)
    CHECK(data.tx.contains(data.tx_twisted.basis().row(i).transpose()));
}

TEST_CASE("integral classes off the (1,1) part are not type (1,1)") {
  GcyClass phi = GcyClass::validate(exp_i_omega(hyperbolic_omega(0)));
  // u = Re phi = (1, 0, -1) is integral but pairs to <u,u> = 2 with phi
  GradedI u(Int(1), Vec22i::Zero(), Int(-1));
  CHECK_FALSE(is_type_11(u, phi));
  GradedI v(Int(0), Vec22i(h2_unit<Int>(e_idx(0)) + h2_unit<Int>(f_idx(0))), Int(0));
  CHECK_FALSE(is_type_11(v, phi));
}

TEST_CASE("eta embedding") {
  Vec22q b = scaled_unit(e_idx(0), 1, 2);
  Vec22i gamma = Vec22i::Zero();
  gamma(e_idx(0)) = Int(2);
  gamma(f_idx(0)) = Int(2);

  GradedI img = eta(gamma, b);
  CHECK(img.r == Int(0));
  CHECK(img.c == gamma);
  CHECK(img.s == Int(1));

  // eta with B = 0 embeds as (0, gamma, 0)
  CHECK(eta(gamma, Vec22q(Vec22q::Zero())) == GradedI(Int(0), gamma, Int(0)));

  // eta is the restriction of exp(B)
  CHECK(GradedQ(img) == bfield_transform(b, GradedQ(GradedI(Int(0), gamma, Int(0)))));

  // non-integral image rejected
  Vec22i half = Vec22i::Zero();
  half(e_idx(0)) = Int(1);
  half(f_idx(0)) = Int(1);
  CHECK_THROWS_WITH_AS(eta(half, b), doctest::Contains("NonIntegralImage"), Error);
}

TEST_CASE("eta identifies the twisted transcendental lattice" * doctest::timeout(600)) {
  Vec22c sigma = standard_sigma();
  struct Case {
    Vec22q b;
    long long r;
  };
  std::vector<Case> cases;
  cases.push_back({scaled_unit(e_idx(0), 1, 2), 2});
  cases.push_back({scaled_unit(f_idx(2), 1, 3), 1});  // (1,1) class: untwisted
  cases.push_back({scaled_unit(e_idx(0), 1, 3), 3});
  cases.push_back({Vec22q(scaled_unit(e_idx(0), 1, 4) + scaled_unit(e_idx(1), 1, 4)), 4});
  cases.push_back({scaled_unit(6, 1, 5), 1});  // E8 root over 5: still (1,1)
  cases.push_back({Vec22q(scaled_unit(e_idx(0), 1, 6) + scaled_unit(6, 1, 6)), 6});
  for (const auto& c : cases) {
    EtaReport rep = verify_eta_hodge_isometry(sigma, c.b);
    CAPTURE(c.r);
    CHECK(rep.eta_bijective);
    CHECK(rep.isometry);
    CHECK(rep.hodge);
    CHECK(rep.r == Int(c.r));
    CHECK(Int::divmod(rep.r, rep.index).second.is_zero());
  }
  // the order-2 instance has index exactly 2
  CHECK(verify_eta_hodge_isometry(sigma, scaled_unit(e_idx(0), 1, 2)).index == Int(2));
}

TEST_CASE("box enumeration cross-checks both sides of the eta pipeline") {
  Vec22c sigma = standard_sigma();
  Vec22q b = scaled_unit(e_idx(0), 1, 2);
  BrauerData data = BrauerData::of(sigma, b);
  GcyClass phi = GcyClass::validate(bfield_transform(b, sigma_class(sigma)));
  Sublattice t_phi = transcendental(phi);

  // Degree-2 box over the two hyperbolic blocks that carry T(X).
  for (int a = -2; a <= 2; ++a)
    for (int b2 = -2; b2 <= 2; ++b2)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          Vec22i gamma = Vec22i::Zero();
          gamma(0) = Int(a);
          gamma(1) = Int(b2);
          gamma(2) = Int(c);
          gamma(3) = Int(d);
          Vec24i v = flatten(GradedI(Int(0), gamma, Int(0)));
          bool in_tx = data.tx.contains(v);
          Rat gb = pair_h2<Rat>(gamma.cast<Rat>(), b);
          bool in_twisted = in_tx && gb.is_integer();
          CHECK(in_twisted == data.tx_twisted.contains(v));
          if (in_twisted) {
            // the eta image of a twisted vector lands in T(phi)...
            CHECK(t_phi.contains(flatten(eta(gamma, b))));
          } else if (in_tx) {
            // ...and a non-twisted one cannot, since its candidate image
            // (0, gamma, gamma.B) is not even integral
            CHECK_THROWS_AS(eta(gamma, b), Error);
          }
        }

  // Conversely: every T(phi) point of the box over {1,2,3,4,23} is an eta
  // image of a twisted T(X) vector.
  for (int a = -2; a <= 2; ++a)
    for (int b2 = -2; b2 <= 2; ++b2)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d)
          for (int s = -2; s <= 2; ++s) {
            Vec24i v = Vec24i::Zero();
            v(1) = Int(a);
            v(2) = Int(b2);
            v(3) = Int(c);
            v(4) = Int(d);
            v(23) = Int(s);
            if (!t_phi.contains(v)) continue;
            Vec22i gamma = v.segment<kH2Dim>(1);
            Rat gb = pair_h2<Rat>(gamma.cast<Rat>(), b);
            CHECK(gb == Rat(Int(s)));
            CHECK(data.tx_twisted.contains(flatten(GradedI(Int(0), gamma, Int(0)))));
          }
}

TEST_CASE("transcendental basis of a twisted class stays in degree 2 and up") {
  Vec22c sigma = standard_sigma();
  Vec22q b = scaled_unit(e_idx(0), 1, 2) + scaled_unit(f_idx(1), 1, 3);
  GcyClass phi = GcyClass::validate(bfield_transform(b, sigma_class(sigma)));
  Sublattice t = transcendental(phi);
  for (int i = 0; i < t.rank(); ++i) {
    CHECK(t.basis()(i, 0) == Int(0));
    // the degree-2 part lies in T(X)
    Vec24i deg2 = Vec24i::Zero();
    deg2.segment<kH2Dim>(1) = t.basis().row(i).segment<kH2Dim>(1).transpose();
    CHECK(classical_tx(sigma).contains(deg2));
  }
}

TEST_CASE("integral b-field equivariance of pic") {
  Rng rng(303);
  for (int t = 0; t < 20; ++t) {
    GcyClass g = random_gcy(rng.next(), t % 2 ? GcyKind::Complex : GcyKind::Symplectic, 5);
    Vec22q b;
    for (int i = 0; i < kH2Dim; ++i) b(i) = Rat(Int(rng.range(-3, 3)));
    // exp(B) with integral B is an integral isometry, so pic moves by it
    Mat24i m = Mat24i::Identity();
    // build the matrix of exp(B) column by column
    for (int j = 0; j < kTotalDim; ++j) {
      Vec24q col = Vec24q::Zero();
      col(j) = Rat(1);
      Vec24q img = flatten(bfield_transform(b, unflatten(col)));
      for (int i = 0; i < kTotalDim; ++i) {
        CHECK(img(i).is_integer());
        m(i, j) = img(i).num();
      }
    }
    Isometry expb = Isometry::verify(m);
    Sublattice moved_pic = pic(bfield_transform(b, g));
    IMat mapped(pic(g).rank(), kTotalDim);
    for (int i = 0; i < pic(g).rank(); ++i)
      mapped.row(i) =
          flatten(expb.apply(unflatten(Vec24i(pic(g).basis().row(i).transpose())))).transpose();
    CHECK(Sublattice::from_rows(mapped) == moved_pic);
  }
}

TEST_CASE("hodge isometry predicate") {
  GcyClass phi = GcyClass::validate(exp_i_omega(hyperbolic_omega(0)));
  Isometry id = Isometry::verify(Mat24i(Mat24i::Identity()));
  Isometry neg = Isometry::verify(Mat24i(-Mat24i::Identity()));

  // identity against i*phi: complex scaling is allowed
  GradedC iphi(crat_i() * phi.cls().r, crat_i() * phi.cls().c, crat_i() * phi.cls().s);
  CHECK(is_hodge_isometry(id, phi, GcyClass::validate(iphi)));

  // -identity: -phi is a complex multiple of phi
  CHECK(is_hodge_isometry(neg, phi, phi));

  // reflection in a pic class fixes the period
  Vec24i d = Vec24i::Zero();
  d(1) = Int(1);
  d(2) = Int(-1);
  CHECK(pic(phi).contains(d));
  CHECK(is_hodge_isometry(reflection(unflatten(d)), phi, phi));

  // a reflection moving the period is detected
  GradedI delta(Int(1), Vec22i(h2_unit<Int>(e_idx(0))), Int(1));
  REQUIRE(mukai_pair(delta, delta) == Int(-2));
  CHECK_FALSE(is_hodge_isometry(reflection(delta), phi, phi));

  // orientation convention: the conjugate period reverses orientation
  GcyClass conj_phi = GcyClass::validate(conjugate(phi.cls()));
  CHECK_FALSE(is_hodge_isometry(id, phi, conj_phi));
  CHECK(is_hodge_isometry(id, phi, conj_phi, /*orientation_sensitive=*/false));
}

TEST_SUITE_END();
