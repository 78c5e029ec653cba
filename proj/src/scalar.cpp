#include "mukai/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace mukai {

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(Int::from_string(text));
  return Rat(Int::from_string(text.substr(0, slash)),
             Int::from_string(text.substr(slash + 1)));
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat Rat::abs() const {
  Rat r = *this;
  r.num_ = r.num_.abs();
  return r;
}

Rat Rat::inv() const {
  if (num_.is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(den_, num_);
}

Rat& Rat::operator+=(const Rat& o) {
  Int g = gcd(den_, o.den_);
  Int dg = o.den_ / g;
  return *this = Rat(num_ * dg + o.num_ * (den_ / g), den_ * dg);
}

Rat& Rat::operator-=(const Rat& o) {
  Int g = gcd(den_, o.den_);
  Int dg = o.den_ / g;
  return *this = Rat(num_ * dg - o.num_ * (den_ / g), den_ * dg);
}

Rat& Rat::operator*=(const Rat& o) {
  return *this = Rat(num_ * o.num_, den_ * o.den_);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_.is_zero()) throw std::domain_error("Rat: division by zero");
  return *this = Rat(num_ * o.den_, den_ * o.num_);
}

std::string Rat::to_string() const {
  return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rat& v) {
  os << v.num_;
  if (!v.den_.is_one()) os << '/' << v.den_;
  return os;
}

Rat abs(const Rat& v) { return v.abs(); }

CRat& CRat::operator+=(const CRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CRat& CRat::operator-=(const CRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CRat& CRat::operator*=(const CRat& o) { return *this = *this * o; }

CRat& CRat::operator/=(const CRat& o) {
  Rat n = o.norm();
  if (n.is_zero()) throw std::domain_error("CRat: division by zero");
  *this = *this * conj(o);
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string CRat::to_string() const {
  return re_.to_string() + (im_.sign() < 0 ? "" : "+") + im_.to_string() + "i";
}

std::ostream& operator<<(std::ostream& os, const CRat& v) {
  os << v.re_;
  if (!v.im_.is_zero()) {
    if (v.im_.sign() > 0) os << '+';
    os << v.im_ << 'i';
  }
  return os;
}

}  // namespace mukai
