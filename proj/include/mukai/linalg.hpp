#pragma once

// Eigen dense types over the exact scalars. All algorithms in this project
// run on these; no floating-point scalar ever appears.

#include "mukai/scalar.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<mukai::Int> : GenericNumTraits<mukai::Int> {
  typedef mukai::Int Real;
  typedef mukai::Rat NonInteger;
  typedef mukai::Int Nested;
  typedef long long Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return mukai::Int(0); }
  static inline Real dummy_precision() { return mukai::Int(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mukai::Rat> : GenericNumTraits<mukai::Rat> {
  typedef mukai::Rat Real;
  typedef mukai::Rat NonInteger;
  typedef mukai::Rat Nested;
  typedef long long Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return mukai::Rat(0); }
  static inline Real dummy_precision() { return mukai::Rat(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mukai::CRat> : GenericNumTraits<mukai::CRat> {
  typedef mukai::Rat Real;
  typedef mukai::CRat NonInteger;
  typedef mukai::CRat Nested;
  typedef long long Literal;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 120,
    MulCost = 240
  };
  static inline Real epsilon() { return mukai::Rat(0); }
  static inline Real dummy_precision() { return mukai::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace mukai {

inline constexpr int kH2Dim = 22;
inline constexpr int kTotalDim = 24;

template <class S> using Vec22 = Eigen::Matrix<S, kH2Dim, 1>;
template <class S> using Vec24 = Eigen::Matrix<S, kTotalDim, 1>;
template <class S> using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S> using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using Vec22i = Vec22<Int>;
using Vec22q = Vec22<Rat>;
using Vec22c = Vec22<CRat>;
using Vec24i = Vec24<Int>;
using Vec24q = Vec24<Rat>;
using Vec24c = Vec24<CRat>;
using VecXi = VecX<Int>;
using IMat = MatX<Int>;
using QMat = MatX<Rat>;
using CMat = MatX<CRat>;
using Mat24i = Eigen::Matrix<Int, kTotalDim, kTotalDim>;
using Mat22i = Eigen::Matrix<Int, kH2Dim, kH2Dim>;

/// Exact dot accumulator. For Rat the partial sums are held as one unreduced
/// fraction over the lcm of the term denominators; take() reduces once.
template <class S>
struct DotAccum {
  S value{};
  void add(const S& term) { value += term; }
  S take() { return std::move(value); }
};

template <>
struct DotAccum<Rat> {
  Int num{0}, den{1};
  void add(const Rat& term) {
    if (term.is_zero()) return;
    Int g = gcd(den, term.den());
    Int qg = term.den() / g;
    num = num * qg + term.num() * (den / g);
    den *= qg;
  }
  Rat take() { return Rat(std::move(num), std::move(den)); }
};

template <>
struct DotAccum<CRat> {
  DotAccum<Rat> re, im;
  void add(const CRat& term) {
    re.add(term.real());
    im.add(term.imag());
  }
  CRat take() { return CRat(re.take(), im.take()); }
};

}  // namespace mukai
