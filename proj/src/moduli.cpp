#include "mukai/moduli.hpp"

namespace mukai {

CRat hermitian_h(const GradedC& x, const GradedC& y) {
  return mukai_pair(x, conjugate(y));
}

Rat omega(const GradedC& x, const GradedC& y) { return hermitian_h(x, y).imag(); }

TangentVector TangentVector::make(GradedC alpha, const GcyClass& phi) {
  if (!mukai_pair(alpha, phi.cls()).is_zero())
    throw Error(Errc::Precondition, "<alpha, phi> must vanish");
  if (!mukai_pair(alpha, conjugate(phi.cls())).is_zero())
    throw Error(Errc::Precondition, "<alpha, conj(phi)> must vanish");
  return TangentVector{std::move(alpha), phi.cls()};
}

std::vector<TangentVector> tangent_basis(const GcyClass& phi) {
  CMat cond(2, kTotalDim);
  Vec24c f = flatten(phi.cls());
  Vec24c fbar = flatten(conjugate(phi.cls()));
  const Mat24i& g = gram_mukai();
  for (int j = 0; j < kTotalDim; ++j) {
    DotAccum<CRat> a, b;
    for (int i = 0; i < kTotalDim; ++i) {
      if (g(j, i).is_zero()) continue;
      a.add(CRat(g(j, i)) * f(i));
      b.add(CRat(g(j, i)) * fbar(i));
    }
    cond(0, j) = a.take();
    cond(1, j) = b.take();
  }
  CMat kernel = field_kernel<CRat>(cond);
  std::vector<TangentVector> out;
  out.reserve(kernel.rows());
  for (int i = 0; i < kernel.rows(); ++i) {
    Vec24c v = kernel.row(i).transpose();
    out.push_back(TangentVector::make(unflatten(v), phi));
  }
  return out;
}

TangentVector project_to_tangent(const GradedC& v, const GcyClass& phi) {
  if (!mukai_pair(v, phi.cls()).is_zero())
    throw Error(Errc::Precondition, "project_to_tangent requires <v, phi> = 0");
  CRat lambda = mukai_pair(v, conjugate(phi.cls())) / CRat(phi.norm());
  GradedC out;
  out.r = v.r - lambda * phi.cls().r;
  out.c = v.c - lambda * phi.cls().c;
  out.s = v.s - lambda * phi.cls().s;
  return TangentVector::make(std::move(out), phi);
}

GradedC sympl_tangent_image(const Vec22q& omega_form, const Vec22q& alpha) {
  Vec22c c;
  for (int i = 0; i < kH2Dim; ++i) c(i) = CRat(Rat(0), alpha(i));
  Rat aw = pair_h2<Rat>(alpha, omega_form);
  return GradedC(CRat(0), std::move(c), CRat(-aw));
}

bool lagrangian_check(const Vec22q& omega_form, const std::vector<Vec22q>& alphas) {
  GcyClass phi = GcyClass::validate(exp_i_omega(omega_form));
  std::vector<GradedC> raw;
  std::vector<GradedC> projected;
  raw.reserve(alphas.size());
  projected.reserve(alphas.size());
  for (const auto& a : alphas) {
    GradedC v = sympl_tangent_image(omega_form, a);
    projected.push_back(project_to_tangent(v, phi).alpha);
    raw.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (!omega(raw[i], raw[j]).is_zero()) return false;
      if (!omega(projected[i], projected[j]).is_zero()) return false;
    }
  return true;
}

QMat realified_hermitian_gram() {
  // With x = a + i*b, H(x,x) has real part a^T G a + b^T G b.
  const int n = 2 * kTotalDim;
  QMat out(n, n);
  out.setZero();
  QMat g = gram_mukai().cast<Rat>();
  out.topLeftCorner(kTotalDim, kTotalDim) = g;
  out.bottomRightCorner(kTotalDim, kTotalDim) = g;
  return out;
}

int omega_rank_on_tangent(const GcyClass& phi) {
  std::vector<TangentVector> basis = tangent_basis(phi);
  std::vector<GradedC> real_basis;
  real_basis.reserve(2 * basis.size());
  for (const auto& t : basis) {
    real_basis.push_back(t.alpha);
    GradedC it;
    it.r = crat_i() * t.alpha.r;
    it.c = crat_i() * t.alpha.c;
    it.s = crat_i() * t.alpha.s;
    real_basis.push_back(std::move(it));
  }
  const int n = static_cast<int>(real_basis.size());
  QMat skew(n, n);
  for (int i = 0; i < n; ++i) {
    skew(i, i) = Rat(0);
    for (int j = i + 1; j < n; ++j) {
      Rat v = omega(real_basis[i], real_basis[j]);
      skew(i, j) = v;
      skew(j, i) = -v;
    }
  }
  return rref<Rat>(skew).rank;
}

}  // namespace mukai
