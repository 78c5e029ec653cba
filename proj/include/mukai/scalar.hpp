#pragma once

#include "mukai/bigint.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mukai {

/// Reduced fraction p/q with q > 0. The zero value is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(Int v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(Int num, Int den);  // reduces, normalizes the sign of den
  static Rat from_string(std::string_view text);  // "p" or "p/q"

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  Rat operator-() const;
  Rat abs() const;
  Rat inv() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string to_string() const;  // always "p/q"
  friend std::ostream& operator<<(std::ostream& os, const Rat& v);

 private:
  Int num_, den_;
};

Rat abs(const Rat& v);

/// Gaussian rational re + im*i. Compares equal to Rat when im = 0.
class CRat {
 public:
  CRat() = default;
  CRat(long long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  CRat(Int v) : re_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  CRat(Rat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  CRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rat& real() const { return re_; }
  const Rat& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  CRat operator-() const { return CRat(-re_, -im_); }
  /// |z|^2 = re^2 + im^2.
  Rat norm() const { return re_ * re_ + im_ * im_; }

  CRat& operator+=(const CRat& o);
  CRat& operator-=(const CRat& o);
  CRat& operator*=(const CRat& o);
  CRat& operator/=(const CRat& o);

  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return CRat(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend CRat operator/(CRat a, const CRat& b) { return a /= b; }

  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CRat& v);

 private:
  Rat re_, im_;
};

inline CRat conj(const CRat& z) { return CRat(z.real(), -z.imag()); }
inline Rat real(const CRat& z) { return z.real(); }
inline Rat imag(const CRat& z) { return z.imag(); }
inline Rat abs2(const CRat& z) { return z.norm(); }

/// The imaginary unit.
inline CRat crat_i() { return CRat(Rat(0), Rat(1)); }

/// Scalar promotion ladder Int -> Rat -> CRat, used by the mixed-flavor
/// graded-class operations.
template <class A, class B>
struct promote {
  using type = A;
};
template <> struct promote<Int, Rat> { using type = Rat; };
template <> struct promote<Rat, Int> { using type = Rat; };
template <> struct promote<Int, CRat> { using type = CRat; };
template <> struct promote<CRat, Int> { using type = CRat; };
template <> struct promote<Rat, CRat> { using type = CRat; };
template <> struct promote<CRat, Rat> { using type = CRat; };
template <class A, class B>
using promote_t = typename promote<A, B>::type;

}  // namespace mukai
