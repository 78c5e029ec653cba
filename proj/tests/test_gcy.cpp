#include "mukai/gcy.hpp"
#include "mukai/rng.hpp"

#include <doctest.h>

using namespace mukai;

namespace {

Vec22q hyperbolic_omega(int k) {
  Vec22q w = Vec22q::Zero();
  w(e_idx(k)) = Rat(1);
  w(f_idx(k)) = Rat(1);
  return w;
}

Vec22c standard_sigma() {
  Vec22c s = Vec22c::Zero();
  s(e_idx(0)) = CRat(1);
  s(f_idx(0)) = CRat(1);
  s(e_idx(1)) = crat_i();
  s(f_idx(1)) = crat_i();
  return s;
}

Vec22q random_vec22q(Rng& rng, long long bound) {
  Vec22q v;
  for (int i = 0; i < kH2Dim; ++i) v(i) = rng.rat(bound);
  return v;
}

GradedQ random_graded_q(Rng& rng, long long bound) {
  GradedQ x(rng.rat(bound), random_vec22q(rng, bound), rng.rat(bound));
  return x;
}

}  // namespace

TEST_SUITE_BEGIN("gcy");

TEST_CASE("validation of the basic examples") {
  // exp(i w), w = e1 + f1: the class (1, iw, -1), norm 2 w^2 = 4.
  GcyClass phi = GcyClass::validate(exp_i_omega(hyperbolic_omega(0)));
  CHECK(phi.norm() == Rat(4));
  CHECK(phi.cls().s == CRat(-1));

  // sigma type, norm sigma.conj(sigma) = 4.
  GcyClass psi = GcyClass::validate(sigma_class(standard_sigma()));
  CHECK(psi.norm() == Rat(4));

  // (0, e1, 0): isotropic but of zero norm.
  Vec22c bad = Vec22c::Zero();
  bad(e_idx(0)) = CRat(1);
  CHECK_THROWS_WITH_AS(GcyClass::validate(sigma_class(bad)),
                       doctest::Contains("PositivityViolation"), Error);

  // non-isotropic input names the isotropy condition
  Vec22c pos = Vec22c::Zero();
  pos(e_idx(0)) = CRat(1);
  pos(f_idx(0)) = CRat(1);
  CHECK_THROWS_WITH_AS(GcyClass::validate(sigma_class(pos)),
                       doctest::Contains("IsotropyViolation"), Error);
}

TEST_CASE("cached norm matches recomputation") {
  Rng rng(211);
  for (int t = 0; t < 50; ++t) {
    GcyClass g = random_gcy(rng.next(), t % 2 ? GcyKind::Symplectic : GcyKind::Complex, 6);
    CHECK(g.norm() == pairing_norm(g.cls()));
  }
}

TEST_CASE("b-field transform formulas") {
  Vec22q b = Vec22q::Zero();
  b(e_idx(0)) = Rat(3);
  b(f_idx(0)) = Rat(5);

  GradedQ one(Rat(1), Vec22q::Zero(), Rat(0));
  GradedQ moved = bfield_transform(b, one);
  CHECK(moved.r == Rat(1));
  CHECK(moved.c == b);
  CHECK(moved.s == pair_h2<Rat>(b, b) / Rat(2));

  // B = 0 is the identity.
  Rng rng(213);
  GradedQ x = random_graded_q(rng, 20);
  CHECK(bfield_transform(Vec22q(Vec22q::Zero()), x) == x);

  // B = e1 on (0, f1, 0) lands in degree 4 with coefficient e1.f1 = 1.
  Vec22q e1 = h2_unit<Rat>(e_idx(0));
  GradedQ f1(Rat(0), h2_unit<Rat>(f_idx(0)), Rat(0));
  GradedQ img = bfield_transform(e1, f1);
  CHECK(img.c == f1.c);
  CHECK(img.s == Rat(1));
}

TEST_CASE("b-field transforms preserve the pairing" * doctest::timeout(300)) {
  Rng rng(215);
  for (int t = 0; t < 1000; ++t) {
    Vec22q b = random_vec22q(rng, 30);
    GradedQ x = random_graded_q(rng, 30);
    GradedQ y = random_graded_q(rng, 30);
    CHECK(mukai_pair(bfield_transform(b, x), bfield_transform(b, y)) == mukai_pair(x, y));
  }
}

TEST_CASE("b-field group law") {
  Rng rng(217);
  for (int t = 0; t < 200; ++t) {
    Vec22q b1 = random_vec22q(rng, 25);
    Vec22q b2 = random_vec22q(rng, 25);
    GradedQ x = random_graded_q(rng, 25);
    CHECK(bfield_transform(b1, bfield_transform(b2, x)) ==
          bfield_transform(Vec22q(b1 + b2), x));
  }
}

TEST_CASE("classification of known instances") {
  Vec22q w = hyperbolic_omega(0);

  // (2, 2iw, -w^2) = 2 exp(iw)
  Vec22c c;
  for (int i = 0; i < kH2Dim; ++i) c(i) = CRat(Rat(0), Rat(2) * w(i));
  GcyClass phi = GcyClass::validate(GradedC(CRat(2), c, CRat(-pair_h2<Rat>(w, w))));
  NormalForm nf = classify(phi);
  auto& sf = std::get<SymplecticForm>(nf);
  CHECK(sf.lambda == CRat(2));
  CHECK(sf.b_field == Vec22q::Zero());
  CHECK(sf.omega == w);
  CHECK(rebuild(nf) == phi);

  // (0, sigma, 0)
  GcyClass psi = GcyClass::validate(sigma_class(standard_sigma()));
  NormalForm nfc = classify(psi);
  auto& cf = std::get<ComplexForm>(nfc);
  CHECK(cf.sigma == standard_sigma());
  CHECK(cf.b_field == Vec22q::Zero());
  CHECK(rebuild(nfc) == psi);

  // (0, sigma, 1): canonical B = (e1 + f1)/2 since lambda = 1/4
  GradedC twisted = sigma_class(standard_sigma());
  twisted.s = CRat(1);
  NormalForm nft = classify(GcyClass::validate(twisted));
  auto& cft = std::get<ComplexForm>(nft);
  Vec22q expect = Vec22q::Zero();
  expect(e_idx(0)) = Rat(Int(1), Int(2));
  expect(f_idx(0)) = Rat(Int(1), Int(2));
  CHECK(cft.b_field == expect);
  CHECK(pair_h2<CRat>(cft.b_field.cast<CRat>(), cft.sigma) == CRat(1));
  CHECK(rebuild(nft) == GcyClass::validate(twisted));
}

TEST_CASE("classify-rebuild is the identity on random classes" * doctest::timeout(600)) {
  Rng rng(219);
  for (int t = 0; t < 500; ++t) {
    GcyClass a = random_gcy(rng.next(), GcyKind::Symplectic, 8);
    CHECK(rebuild(classify(a)) == a);
    GcyClass b = random_gcy(rng.next(), GcyKind::Complex, 8);
    CHECK(rebuild(classify(b)) == b);
  }
}

TEST_CASE("symplectic norm identity") {
  Rng rng(221);
  for (int t = 0; t < 100; ++t) {
    GcyClass g = random_gcy(rng.next(), GcyKind::Symplectic, 8);
    auto sf = std::get<SymplecticForm>(classify(g));
    CHECK(g.norm() == Rat(2) * sf.lambda.norm() * pair_h2<Rat>(sf.omega, sf.omega));
  }
}

TEST_CASE("positive planes") {
  GcyClass phi = GcyClass::validate(exp_i_omega(hyperbolic_omega(0)));
  PositivePlane p = plane_of(phi);
  CHECK(p.ratio_d == Rat(1));
  CHECK(p.u(0) == Rat(1));
  CHECK(p.u(23) == Rat(-1));
  CHECK(p.v(1) == Rat(1));
  CHECK(p.v(2) == Rat(1));
  CHECK(pair24<Rat>(p.u, p.v) == Rat(0));
  CHECK(pair24<Rat>(p.u, p.u) == pair24<Rat>(p.v, p.v));

  // scaling by i sends (u, v) to (-v, u): same plane, same orientation.
  GradedC iphi(crat_i() * phi.cls().r, crat_i() * phi.cls().c, crat_i() * phi.cls().s);
  PositivePlane q = plane_of(GcyClass::validate(iphi));
  CHECK(q.u == Vec24q(-p.v));
  CHECK(q.v == p.u);

  // b-field equivariance of P_phi
  Rng rng(223);
  Vec22q b = random_vec22q(rng, 10);
  PositivePlane pb = bfield_transform(b, p);
  PositivePlane pb2 = plane_of(bfield_transform(b, phi));
  CHECK(pb == pb2);
}

TEST_CASE("plane orthogonality") {
  GcyClass psi = GcyClass::validate(sigma_class(standard_sigma()));
  GcyClass phi = GcyClass::validate(exp_i_omega(hyperbolic_omega(2)));
  CHECK(planes_orthogonal(plane_of(psi), plane_of(phi)));
  CHECK_FALSE(planes_orthogonal(plane_of(psi), plane_of(psi)));
}

TEST_CASE("the four orthogonality equations of a symplectic pair") {
  // The pairings of the planes of exp(iw) and exp(B'+iw') expand to
  //   ((w^2 + w'^2 - B'^2)/2, -B'.w', B'.w, w.w')
  Rng rng(225);
  for (int t = 0; t < 50; ++t) {
    Vec22q w = hyperbolic_omega(0) + random_vec22q(rng, 3);
    if (!(pair_h2<Rat>(w, w) > Rat(0))) continue;
    Vec22q wp = random_vec22q(rng, 3);
    if (!(pair_h2<Rat>(wp, wp) > Rat(0))) continue;
    Vec22q bp = random_vec22q(rng, 3);
    auto sys = sympl_orthogonality_system(w, bp, wp);
    Rat w2 = pair_h2<Rat>(w, w), wp2 = pair_h2<Rat>(wp, wp), bp2 = pair_h2<Rat>(bp, bp);
    CHECK(sys[0] == (w2 + wp2 - bp2) / Rat(2));
    CHECK(sys[1] == -pair_h2<Rat>(bp, wp));
    CHECK(sys[2] == pair_h2<Rat>(bp, w));
    CHECK(sys[3] == pair_h2<Rat>(w, wp));
  }
}

TEST_CASE("hyperkaehler pairs and norms") {
  GcyClass psi = GcyClass::validate(sigma_class(standard_sigma()));
  GcyClass phi = GcyClass::validate(exp_i_omega(hyperbolic_omega(2)));
  CHECK(is_hk_pair(psi, phi));

  // scaling one side by 2 breaks the norm condition (4 vs 16)
  GradedC twice(CRat(2) * phi.cls().r, CRat(2) * phi.cls().c, CRat(2) * phi.cls().s);
  GcyClass phi2 = GcyClass::validate(twice);
  CHECK(phi2.norm() == Rat(16));
  CHECK_FALSE(is_hk_pair(psi, phi2));
  CHECK_THROWS_WITH_AS(GK3Pair::make(psi, phi2), doctest::Contains("NormMismatch"), Error);

  CHECK_FALSE(is_hk_pair(phi, phi));
  CHECK_THROWS_WITH_AS(GK3Pair::make(phi, phi), doctest::Contains("NotOrthogonal"), Error);
}

TEST_CASE("four-space of a pair") {
  GcyClass psi = GcyClass::validate(sigma_class(standard_sigma()));
  GcyClass phi = GcyClass::validate(exp_i_omega(hyperbolic_omega(2)));
  GK3Pair pair = GK3Pair::make(psi, phi);
  FourSpace pi = four_space(pair);

  // Gram positive definite is the constructor invariant; cross-check one
  // diagonal entry.
  CHECK(pair24<Rat>(Vec24q(pi.rows().row(0).transpose()),
                    Vec24q(pi.rows().row(0).transpose())) > Rat(0));

  // a degenerate quadruple is rejected
  FourSpace::Rows bad = pi.rows();
  bad.row(3) = bad.row(0);
  CHECK_THROWS_AS(FourSpace::from_rows(bad), Error);

  // so is a non-orthogonal one with a negative direction
  FourSpace::Rows mixed = pi.rows();
  Vec24q root = Vec24q::Zero();
  root(7) = Rat(1);  // an E8 root, square -2
  mixed.row(3) = root.transpose();
  CHECK_THROWS_AS(FourSpace::from_rows(mixed), Error);

  // the b-field transform of the pair spans exp(B).Pi
  Rng rng(227);
  Vec22q b = random_vec22q(rng, 6);
  GK3Pair moved = GK3Pair::make(bfield_transform(b, psi), bfield_transform(b, phi));
  CHECK(four_space(moved).same_span(bfield_transform(b, pi)));
}

TEST_CASE("classical reduction of a classical pair") {
  GcyClass psi = GcyClass::validate(sigma_class(standard_sigma()));
  GcyClass phi = GcyClass::validate(exp_i_omega(hyperbolic_omega(2)));
  FourSpace pi = four_space(GK3Pair::make(psi, phi));
  ClassicalReduction red = classical_reduction(pi);
  CHECK(red.b_prime == Vec22q::Zero());
  CHECK_FALSE(red.complement_complex_type);
  // H is pure degree 2
  CHECK(red.h_plane.u(0).is_zero());
  CHECK(red.h_plane.u(23).is_zero());
  CHECK(red.h_plane.v(0).is_zero());
  CHECK(red.h_plane.v(23).is_zero());
  // ratio 1 here, so the isotropic generator is rational
  REQUIRE(red.sigma.has_value());
  // H came out as the sigma-plane for this instance
  CHECK(red.h_plane.u.segment<kH2Dim>(1) == Vec22q(hyperbolic_omega(0)));
}

TEST_CASE("classical reduction recovers a moved b-field") {
  GcyClass psi = GcyClass::validate(sigma_class(standard_sigma()));
  GcyClass phi = GcyClass::validate(exp_i_omega(hyperbolic_omega(2)));
  FourSpace pi = four_space(GK3Pair::make(psi, phi));
  Vec22q b = h2_unit<Rat>(e_idx(2));
  FourSpace moved = bfield_transform(b, pi);
  ClassicalReduction red = classical_reduction(moved);
  CHECK(red.b_prime == b);
  CHECK(planes_orthogonal(red.h_plane, red.complement));

  // reassembly: exp(B') applied to the classical pieces spans the input
  FourSpace::Rows rows;
  rows.row(0) = red.h_plane.u.transpose();
  rows.row(1) = red.h_plane.v.transpose();
  rows.row(2) = flatten(bfield_transform(Vec22q(-red.b_prime), unflatten(red.complement.u))).transpose();
  rows.row(3) = flatten(bfield_transform(Vec22q(-red.b_prime), unflatten(red.complement.v))).transpose();
  FourSpace classical = FourSpace::from_rows(rows);
  CHECK(bfield_transform(red.b_prime, classical).same_span(moved));
}

TEST_CASE("classical reduction reports a square ratio generator") {
  // H-plane spanned by e1 + 4f1 (square 8) and e2 + f2 (square 2):
  // ratio 4 = 2^2, so sigma = u + 2iv is isotropic and gets reported.
  FourSpace::Rows rows;
  rows.setZero();
  Vec24q u = Vec24q::Zero(), v = Vec24q::Zero();
  u(1) = Rat(1);
  u(2) = Rat(4);
  v(3) = Rat(1);
  v(4) = Rat(1);
  rows.row(0) = u.transpose();
  rows.row(1) = v.transpose();
  rows.row(2) = flatten(GradedQ(Rat(1), Vec22q::Zero(), Rat(-1))).transpose();
  rows.row(3) = flatten(GradedQ(Rat(0), hyperbolic_omega(2), Rat(0))).transpose();
  ClassicalReduction red = classical_reduction(FourSpace::from_rows(rows));
  REQUIRE(red.sigma.has_value());
  CHECK(red.h_plane.ratio_d == Rat(4));
  // u + 2iv is isotropic: u^2 - 4 v^2 = 0
  CHECK(pair_h2<CRat>(*red.sigma, *red.sigma).is_zero());
  CHECK(pairing_norm(sigma_class(*red.sigma)) > Rat(0));
}

TEST_CASE("random gcy generator") {
  GcyClass a = random_gcy(7, GcyKind::Symplectic, 5);
  GcyClass b = random_gcy(7, GcyKind::Symplectic, 5);
  CHECK(a == b);
  CHECK_FALSE(a.cls().r.is_zero());

  GcyClass c = random_gcy(7, GcyKind::Complex, 5);
  CHECK(c.cls().r.is_zero());

  Rng rng(229);
  for (int t = 0; t < 40; ++t) {
    GcyKind kind = t % 2 ? GcyKind::Complex : GcyKind::Symplectic;
    GcyClass g = random_gcy(rng.next(), kind, 7);
    CHECK((kind == GcyKind::Symplectic) == !g.cls().r.is_zero());
  }
}

TEST_SUITE_END();
