#pragma once

// Exact integer linear algebra over the Mukai lattice: Hermite and Smith
// normal forms, kernels, saturation, orthogonal complements, inertia,
// discriminant groups, verified isometries and reflections.

#include "mukai/graded.hpp"

#include <optional>
#include <vector>

namespace mukai {

/// Row Hermite normal form: u*a = h with u unimodular, h canonical
/// (pivot columns strictly increasing, pivots positive, entries above each
/// pivot reduced into [0, pivot), zero rows at the bottom).
struct HnfResult {
  IMat h;
  IMat u;
  int rank = 0;
};
HnfResult hnf(const IMat& a);

/// Smith normal form: u*a*v = d diagonal with d1 | d2 | ... , entries >= 0.
struct SnfResult {
  IMat d;
  IMat u;
  IMat v;
};
SnfResult snf(const IMat& a);

/// Exact determinant (fraction-free Bareiss elimination).
Int det_bareiss(const IMat& a);

/// Reduced row echelon form over an exact field scalar (Rat or CRat).
/// Returns the echelon matrix, the pivot columns, and the rank.
template <class S>
struct RrefResult {
  MatX<S> r;
  std::vector<int> pivots;
  int rank = 0;
};
template <class S>
RrefResult<S> rref(MatX<S> m);

/// Basis rows of {x : a*x = 0} over the scalar field.
template <class S>
MatX<S> field_kernel(const MatX<S>& a);

/// Saturated integer sublattice of Z^24, stored as canonical-HNF rows so that
/// sublattice equality is row-matrix equality.
class Sublattice {
 public:
  /// Canonicalizes arbitrary generating rows (any row count, 24 columns).
  static Sublattice from_rows(const IMat& rows);
  static Sublattice zero();
  static Sublattice full();

  int rank() const { return static_cast<int>(basis_.rows()); }
  const IMat& basis() const { return basis_; }
  bool saturated() const { return saturated_; }

  bool contains(const Vec24i& v) const;
  /// Integer coordinates of v in the basis, when v lies in the lattice.
  std::optional<VecXi> coordinates_of(const Vec24i& v) const;
  /// Gram matrix of the basis under the Mukai pairing.
  IMat gram() const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

 private:
  Sublattice(IMat basis, bool saturated)
      : basis_(std::move(basis)), saturated_(saturated) {}

  IMat basis_;  // rank x 24, canonical HNF
  bool saturated_;
};

/// {v in Z^24 : a*v = 0} for a rational matrix with 24 columns. Kernels are
/// automatically saturated. Rows are cleared of denominators first so the
/// computation stays integral.
Sublattice integer_kernel(const QMat& a);
Sublattice integer_kernel(const IMat& a);

/// Basis rows of the integer kernel of an arbitrary integer matrix
/// (general column count; used by the congruence-kernel computations).
IMat integer_kernel_rows(const IMat& a);

/// Smallest saturated sublattice containing l (span together with Z^24).
Sublattice saturate(const Sublattice& l);

/// {g : <g, d> = 0 for all d in l} under the Mukai pairing; saturated,
/// rank 24 - rank(l).
Sublattice orth_complement(const Sublattice& l);

/// Intersection of two saturated sublattices.
Sublattice intersect(const Sublattice& a, const Sublattice& b);

/// Index [big : small] for a finite-index inclusion of equal-rank lattices.
Int sublattice_index(const Sublattice& big, const Sublattice& small);

struct Inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia of a symmetric rational matrix by recursive symmetric
/// pivoting (Sylvester invariants; zero diagonals are handled by 2x2
/// hyperbolic pivots, which contribute (1,0,1) each).
Inertia inertia(const QMat& s);
Inertia inertia(const IMat& s);

/// Invariant factors d1 | d2 | ... (each >= 2) of a finite abelian group.
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;
  bool trivial() const { return invariant_factors.empty(); }
  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

/// Discriminant group of a nondegenerate sublattice: invariant factors of
/// coker(Gram) from the Smith normal form, unit factors dropped.
FiniteAbelianGroup discriminant_group(const Sublattice& l);

/// Integer matrix verified to preserve the Mukai Gram matrix. Values exist
/// only through the verifying constructor, so anything typed Isometry is
/// sound to apply downstream.
class Isometry {
 public:
  /// Throws NotAnIsometry unless m^T * gram * m = gram (det is then +-1 and
  /// is checked as well).
  static Isometry verify(const Mat24i& m);

  const Mat24i& matrix() const { return m_; }
  const Int& det() const { return det_; }

  template <class S>
  GradedClass<S> apply(const GradedClass<S>& x) const {
    Vec24<S> v = flatten(x);
    Vec24<S> out;
    for (int i = 0; i < kTotalDim; ++i) {
      DotAccum<S> acc;
      for (int j = 0; j < kTotalDim; ++j)
        if (!m_(i, j).is_zero()) acc.add(S(m_(i, j)) * v(j));
      out(i) = acc.take();
    }
    return unflatten(out);
  }

  Isometry inverse() const;
  friend Isometry operator*(const Isometry& a, const Isometry& b);
  friend bool operator==(const Isometry& a, const Isometry& b) { return a.m_ == b.m_; }

 private:
  explicit Isometry(Mat24i m, Int det) : m_(std::move(m)), det_(std::move(det)) {}
  Mat24i m_;
  Int det_;
};

/// Unverified check: does m preserve the Mukai Gram matrix?
bool is_isometry(const Mat24i& m);

template <class S>
GradedClass<S> apply_isometry(const Isometry& g, const GradedClass<S>& x) {
  return g.apply(x);
}

/// Reflection s_d(x) = x + <x,d>*d in a (-2)-class. Involutive, fixes the
/// d-perpendicular. Throws WrongSquareNorm unless <d,d> = -2.
Isometry reflection(const GradedI& delta);

// -- templated implementations --

template <class S>
RrefResult<S> rref(MatX<S> m) {
  RrefResult<S> out;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    S inv_pivot = S(1) / m(row, col);
    for (int j = col; j < cols; ++j) m(row, j) *= inv_pivot;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      S f = m(i, col);
      for (int j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.r = std::move(m);
  return out;
}

template <class S>
MatX<S> field_kernel(const MatX<S>& a) {
  auto e = rref<S>(a);
  const int cols = static_cast<int>(a.cols());
  std::vector<int> free_cols;
  {
    std::size_t k = 0;
    for (int c = 0; c < cols; ++c) {
      if (k < e.pivots.size() && e.pivots[k] == c)
        ++k;
      else
        free_cols.push_back(c);
    }
  }
  MatX<S> basis(free_cols.size(), cols);
  basis.setZero();
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    int fc = free_cols[b];
    basis(b, fc) = S(1);
    for (std::size_t p = 0; p < e.pivots.size(); ++p)
      basis(b, e.pivots[p]) = -e.r(p, fc);
  }
  return basis;
}

}  // namespace mukai
