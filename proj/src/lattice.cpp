#include "mukai/lattice.hpp"

#include <algorithm>

namespace mukai {

namespace {

// Combines rows i and j so that column col holds (gcd, 0); mirrors the
// operation on u. Invariant for the normal-form loops: row i changes only
// when the pivot fails to divide m(j, col), and then |m(i, col)| strictly
// decreases.
void gcd_rows(IMat& m, IMat& u, int i, int j, int col) {
  const Int a = m(i, col);
  const Int b = m(j, col);
  if (b.is_zero()) return;
  if (a.is_zero()) {
    m.row(i).swap(m.row(j));
    u.row(i).swap(u.row(j));
    m.row(j) = -m.row(j);
    u.row(j) = -u.row(j);
    return;
  }
  auto [q0, r0] = Int::divmod(b, a);
  if (r0.is_zero()) {
    m.row(j) -= q0 * m.row(i);
    u.row(j) -= q0 * u.row(i);
    return;
  }
  auto [g, x, y] = ext_gcd(a, b);
  const Int p = a / g;
  const Int q = b / g;
  IMat mi = x * m.row(i) + y * m.row(j);
  IMat mj = p * m.row(j) - q * m.row(i);
  m.row(i) = mi;
  m.row(j) = mj;
  IMat ui = x * u.row(i) + y * u.row(j);
  IMat uj = p * u.row(j) - q * u.row(i);
  u.row(i) = ui;
  u.row(j) = uj;
}

}  // namespace

HnfResult hnf(const IMat& a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  HnfResult out;
  out.h = a;
  out.u = IMat::Identity(rows, rows);
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    for (int i = row + 1; i < rows; ++i)
      if (!out.h(i, col).is_zero()) gcd_rows(out.h, out.u, row, i, col);
    if (out.h(row, col).is_zero()) continue;
    if (out.h(row, col).sign() < 0) {
      out.h.row(row) = -out.h.row(row);
      out.u.row(row) = -out.u.row(row);
    }
    const Int& pivot = out.h(row, col);
    for (int i = 0; i < row; ++i) {
      Int q = Int::fdivmod(out.h(i, col), pivot).first;
      if (!q.is_zero()) {
        out.h.row(i) -= q * out.h.row(row);
        out.u.row(i) -= q * out.u.row(row);
      }
    }
    ++row;
  }
  out.rank = row;
  return out;
}

SnfResult snf(const IMat& a) {
  SnfResult out;
  out.d = a;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  out.u = IMat::Identity(rows, rows);
  out.v = IMat::Identity(cols, cols);
  IMat& d = out.d;

  const int n = std::min(rows, cols);
  for (int k = 0; k < n; ++k) {
    // Find a nonzero entry in the remaining block; smallest magnitude keeps
    // the growth down.
    int pi = -1, pj = -1;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        if (d(i, j).is_zero()) continue;
        if (pi < 0 || d(i, j).abs() < d(pi, pj).abs()) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != k) {
      d.row(pi).swap(d.row(k));
      out.u.row(pi).swap(out.u.row(k));
    }
    if (pj != k) {
      d.col(pj).swap(d.col(k));
      out.v.col(pj).swap(out.v.col(k));
    }
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = k + 1; i < rows; ++i)
        if (!d(i, k).is_zero()) {
          gcd_rows(d, out.u, k, i, k);
          dirty = true;
        }
      for (int j = k + 1; j < cols; ++j)
        if (!d(k, j).is_zero()) {
          // Same elimination on columns, mirrored on v.
          const Int a0 = d(k, k);
          const Int b0 = d(k, j);
          if (a0.is_zero()) {
            d.col(k).swap(d.col(j));
            out.v.col(k).swap(out.v.col(j));
            dirty = true;
            continue;
          }
          auto [q0, r0] = Int::divmod(b0, a0);
          if (r0.is_zero()) {
            d.col(j) -= q0 * d.col(k);
            out.v.col(j) -= q0 * out.v.col(k);
            continue;
          }
          auto [g, x, y] = ext_gcd(a0, b0);
          const Int p = a0 / g;
          const Int q = b0 / g;
          IMat cj = p * d.col(j) - q * d.col(k);
          IMat ck = x * d.col(k) + y * d.col(j);
          d.col(k) = ck;
          d.col(j) = cj;
          IMat vj = p * out.v.col(j) - q * out.v.col(k);
          IMat vk = x * out.v.col(k) + y * out.v.col(j);
          out.v.col(k) = vk;
          out.v.col(j) = vj;
          dirty = true;
        }
    }
    // Fold in any interior entry not divisible by the corner.
    for (int i = k + 1; i < rows && !d(k, k).is_zero(); ++i) {
      bool bad = false;
      for (int j = k + 1; j < cols; ++j)
        if (!Int::divmod(d(i, j), d(k, k)).second.is_zero()) {
          bad = true;
          break;
        }
      if (bad) {
        d.row(k) += d.row(i);
        out.u.row(k) += out.u.row(i);
        --k;  // redo this corner
        break;
      }
    }
  }
  for (int k = 0; k < n; ++k)
    if (d(k, k).sign() < 0) {
      d.row(k) = -d.row(k);
      out.u.row(k) = -out.u.row(k);
    }
  // Enforce the divisor chain d1 | d2 | ...
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (int k = 0; k + 1 < n; ++k) {
      const Int x = d(k, k);
      const Int y = d(k + 1, k + 1);
      if (y.is_zero() || x.is_zero()) {
        if (!y.is_zero() && x.is_zero()) {
          d.row(k).swap(d.row(k + 1));
          out.u.row(k).swap(out.u.row(k + 1));
          d.col(k).swap(d.col(k + 1));
          out.v.col(k).swap(out.v.col(k + 1));
          dirty = true;
        }
        continue;
      }
      if (Int::divmod(y, x).second.is_zero()) continue;
      // diag(x,y) ~ diag(g, lcm):
      //   [[a, b], [-y/g, x/g]] * diag(x,y) * [[1, -b*y/g], [1, a*x/g]]
      // with a*x + b*y = g; both factors have determinant 1.
      auto e = ext_gcd(x, y);
      Int g = e.g;
      Int xg = x / g, yg = y / g;
      d(k, k) = g;
      d(k + 1, k + 1) = xg * y;
      IMat uk = e.x * out.u.row(k) + e.y * out.u.row(k + 1);
      IMat uk1 = -yg * out.u.row(k) + xg * out.u.row(k + 1);
      out.u.row(k) = uk;
      out.u.row(k + 1) = uk1;
      IMat vk = out.v.col(k) + out.v.col(k + 1);
      IMat vk1 = -(e.y * yg) * out.v.col(k) + (e.x * xg) * out.v.col(k + 1);
      out.v.col(k) = vk;
      out.v.col(k + 1) = vk1;
      dirty = true;
    }
  }
  return out;
}

Int det_bareiss(const IMat& a) {
  if (a.rows() != a.cols()) throw Error(Errc::BadDimension, "determinant of a non-square matrix");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Int(1);
  IMat m = a;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  Int det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

Sublattice Sublattice::from_rows(const IMat& rows) {
  if (rows.rows() == 0) return zero();
  if (rows.cols() != kTotalDim)
    throw Error(Errc::BadDimension, "sublattice rows must have 24 columns");
  auto e = hnf(rows);
  IMat basis = e.h.topRows(e.rank);
  // Saturated iff the saturation has the same canonical HNF.
  IMat constraints = integer_kernel_rows(basis);
  auto sat = hnf(integer_kernel_rows(constraints));
  bool saturated =
      sat.rank == basis.rows() && IMat(sat.h.topRows(sat.rank)) == basis;
  return Sublattice(std::move(basis), saturated);
}

Sublattice Sublattice::zero() { return Sublattice(IMat(0, kTotalDim), true); }

Sublattice Sublattice::full() {
  return Sublattice(IMat::Identity(kTotalDim, kTotalDim), true);
}

bool Sublattice::contains(const Vec24i& v) const { return coordinates_of(v).has_value(); }

std::optional<VecXi> Sublattice::coordinates_of(const Vec24i& v) const {
  // Back-substitute against the HNF rows.
  VecXi coeff(rank());
  Eigen::Matrix<Int, 1, kTotalDim> rest = v.transpose();
  for (int i = 0; i < rank(); ++i) {
    int pc = 0;
    while (pc < kTotalDim && basis_(i, pc).is_zero()) ++pc;
    auto [q, r] = Int::divmod(rest(pc), basis_(i, pc));
    if (!r.is_zero()) return std::nullopt;
    coeff(i) = q;
    if (!q.is_zero()) rest -= q * basis_.row(i);
  }
  for (int j = 0; j < kTotalDim; ++j)
    if (!rest(j).is_zero()) return std::nullopt;
  return coeff;
}

IMat Sublattice::gram() const {
  const int k = rank();
  IMat g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      g(i, j) = pair24<Int>(basis_.row(i).transpose(), basis_.row(j).transpose());
  return g;
}

IMat integer_kernel_rows(const IMat& a) {
  const int n = static_cast<int>(a.cols());
  auto e = hnf(a.transpose());
  // Bottom rows of u annihilate a^T from the left, i.e. span the kernel.
  return e.u.bottomRows(n - e.rank);
}

Sublattice integer_kernel(const IMat& a) {
  if (a.cols() != kTotalDim && a.rows() != 0)
    throw Error(Errc::BadDimension, "integer_kernel expects 24 columns");
  if (a.rows() == 0) return Sublattice::full();
  return Sublattice::from_rows(integer_kernel_rows(a));
}

Sublattice integer_kernel(const QMat& a) {
  if (a.rows() == 0) return Sublattice::full();
  IMat scaled(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    Int m(1);
    for (int j = 0; j < a.cols(); ++j) m = lcm(m, a(i, j).den());
    for (int j = 0; j < a.cols(); ++j)
      scaled(i, j) = a(i, j).num() * (m / a(i, j).den());
  }
  return integer_kernel(scaled);
}

Sublattice saturate(const Sublattice& l) {
  if (l.saturated()) return l;
  return Sublattice::from_rows(integer_kernel_rows(integer_kernel_rows(l.basis())));
}

Sublattice orth_complement(const Sublattice& l) {
  if (l.rank() == 0) return Sublattice::full();
  IMat forms = l.basis() * gram_mukai();
  return integer_kernel(forms);
}

Sublattice intersect(const Sublattice& a, const Sublattice& b) {
  if (!a.saturated() || !b.saturated())
    throw Error(Errc::Precondition, "intersect requires saturated sublattices");
  IMat ca = integer_kernel_rows(a.basis());
  IMat cb = integer_kernel_rows(b.basis());
  IMat stacked(ca.rows() + cb.rows(), kTotalDim);
  if (ca.rows() > 0) stacked.topRows(ca.rows()) = ca;
  if (cb.rows() > 0) stacked.bottomRows(cb.rows()) = cb;
  return integer_kernel(stacked);
}

Int sublattice_index(const Sublattice& big, const Sublattice& small) {
  if (big.rank() != small.rank())
    throw Error(Errc::Precondition, "index requires equal ranks");
  const int k = big.rank();
  IMat coords(k, k);
  for (int i = 0; i < k; ++i) {
    auto c = big.coordinates_of(small.basis().row(i).transpose());
    if (!c) throw Error(Errc::Precondition, "not a sublattice of the first argument");
    coords.row(i) = c->transpose();
  }
  return det_bareiss(coords).abs();
}

namespace {

Inertia inertia_impl(QMat s) {
  Inertia out;
  std::vector<int> live(s.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);

  while (!live.empty()) {
    // Prefer a nonzero diagonal pivot.
    int pd = -1;
    for (std::size_t a = 0; a < live.size(); ++a)
      if (!s(live[a], live[a]).is_zero()) {
        pd = static_cast<int>(a);
        break;
      }
    if (pd >= 0) {
      int i = live[pd];
      const Rat d = s(i, i);
      (d.sign() > 0 ? out.positive : out.negative) += 1;
      live.erase(live.begin() + pd);
      for (int a : live)
        for (int b : live) s(a, b) -= s(a, i) * s(i, b) / d;
      continue;
    }
    // All diagonal entries vanish: look for an off-diagonal hyperbolic pivot.
    int pi = -1, pj = -1;
    for (std::size_t a = 0; a < live.size() && pi < 0; ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b)
        if (!s(live[a], live[b]).is_zero()) {
          pi = static_cast<int>(a);
          pj = static_cast<int>(b);
          break;
        }
    if (pi < 0) {
      out.zero += static_cast<int>(live.size());
      break;
    }
    int i = live[pi], j = live[pj];
    const Rat h = s(i, j);
    out.positive += 1;
    out.negative += 1;
    live.erase(live.begin() + pj);
    live.erase(live.begin() + pi);
    for (int a : live)
      for (int b : live)
        s(a, b) -= (s(a, i) * s(j, b) + s(a, j) * s(i, b)) / h;
  }
  return out;
}

}  // namespace

Inertia inertia(const QMat& s) {
  if (s.rows() != s.cols()) throw Error(Errc::NotSymmetric, "inertia of a non-square matrix");
  for (int i = 0; i < s.rows(); ++i)
    for (int j = i + 1; j < s.cols(); ++j)
      if (s(i, j) != s(j, i)) throw Error(Errc::NotSymmetric, "inertia requires a symmetric matrix");
  return inertia_impl(s);
}

Inertia inertia(const IMat& s) { return inertia(QMat(s.cast<Rat>())); }

FiniteAbelianGroup discriminant_group(const Sublattice& l) {
  IMat g = l.gram();
  if (l.rank() > 0 && det_bareiss(g).is_zero())
    throw Error(Errc::DegenerateGram, "discriminant group requires a nondegenerate Gram matrix");
  auto e = snf(g);
  FiniteAbelianGroup out;
  for (int k = 0; k < l.rank(); ++k) {
    Int d = e.d(k, k).abs();
    if (!d.is_one()) out.invariant_factors.push_back(std::move(d));
  }
  return out;
}

bool is_isometry(const Mat24i& m) {
  const Mat24i& g = gram_mukai();
  return Mat24i(m.transpose() * g * m) == g;
}

Isometry Isometry::verify(const Mat24i& m) {
  if (!is_isometry(m))
    throw Error(Errc::NotAnIsometry, "matrix does not preserve the Mukai Gram matrix");
  Int d = det_bareiss(m);
  if (!(d == Int(1) || d == Int(-1)))
    throw Error(Errc::NotAnIsometry, "isometry determinant must be +-1");
  return Isometry(m, std::move(d));
}

Isometry Isometry::inverse() const {
  // From m^T g m = g: m^-1 = g^-1 m^T g. The Mukai Gram matrix is unimodular,
  // so g^-1 is integral: the U and degree-0/4 blocks are self-inverse and the
  // E8(-1) blocks invert by the adjugate (det = 1).
  static const Mat24i ginv = [] {
    Mat24i inv;
    inv.setZero();
    for (int k = 0; k < 3; ++k) {
      inv(1 + e_idx(k), 1 + f_idx(k)) = Int(1);
      inv(1 + f_idx(k), 1 + e_idx(k)) = Int(1);
    }
    inv(0, 23) = Int(-1);
    inv(23, 0) = Int(-1);
    IMat e8 = gram_e8();
    Int d = det_bareiss(e8);
    Eigen::Matrix<Int, 8, 8> e8inv;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        IMat minor(7, 7);
        for (int a = 0, ai = 0; a < 8; ++a) {
          if (a == j) continue;
          for (int b = 0, bi = 0; b < 8; ++b) {
            if (b == i) continue;
            minor(ai, bi++) = e8(a, b);
          }
          ++ai;
        }
        Int cof = det_bareiss(minor);
        if ((i + j) % 2 == 1) cof = -cof;
        e8inv(i, j) = d.sign() < 0 ? -cof : cof;
      }
    inv.block<8, 8>(7, 7) = e8inv;
    inv.block<8, 8>(15, 15) = e8inv;
    return inv;
  }();
  return Isometry(Mat24i(ginv * m_.transpose() * gram_mukai()), det_);
}

Isometry operator*(const Isometry& a, const Isometry& b) {
  return Isometry(Mat24i(a.m_ * b.m_), a.det_ * b.det_);
}

Isometry reflection(const GradedI& delta) {
  Int sq = mukai_pair(delta, delta);
  if (sq != Int(-2))
    throw Error(Errc::WrongSquareNorm,
                "reflection requires <d,d> = -2, got " + sq.to_string());
  Vec24i d = flatten(delta);
  Vec24i gd = gram_mukai() * d;
  Mat24i m = Mat24i::Identity() + d * gd.transpose();
  return Isometry::verify(m);
}

}  // namespace mukai
