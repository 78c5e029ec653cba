#include "mukai/graded.hpp"

namespace mukai {

const Eigen::Matrix<Int, 8, 8>& gram_e8() {
  static const Eigen::Matrix<Int, 8, 8> g = [] {
    Eigen::Matrix<Int, 8, 8> m;
    m.setZero();
    for (int i = 0; i < 8; ++i) m(i, i) = Int(-2);
    for (const auto& e : detail::kE8Edges) {
      m(e[0], e[1]) = Int(1);
      m(e[1], e[0]) = Int(1);
    }
    return m;
  }();
  return g;
}

const Mat22i& gram_h2() {
  static const Mat22i g = [] {
    Mat22i m;
    m.setZero();
    for (int k = 0; k < 3; ++k) {
      m(e_idx(k), f_idx(k)) = Int(1);
      m(f_idx(k), e_idx(k)) = Int(1);
    }
    m.block<8, 8>(6, 6) = gram_e8();
    m.block<8, 8>(14, 14) = gram_e8();
    return m;
  }();
  return g;
}

const Mat24i& gram_mukai() {
  static const Mat24i g = [] {
    Mat24i m;
    m.setZero();
    m.block<kH2Dim, kH2Dim>(1, 1) = gram_h2();
    m(0, 23) = Int(-1);
    m(23, 0) = Int(-1);
    return m;
  }();
  return g;
}

GradedC conjugate(const GradedC& x) {
  GradedC out;
  out.r = conj(x.r);
  for (int i = 0; i < kH2Dim; ++i) out.c(i) = conj(x.c(i));
  out.s = conj(x.s);
  return out;
}

}  // namespace mukai
