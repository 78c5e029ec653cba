#include "mukai/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mukai {

namespace {

using Limbs = std::vector<std::uint32_t>;
constexpr std::uint64_t kBase = 1ull << 32;

void trim_limbs(Limbs& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// |a| += |b|
void mag_add(Limbs& a, const Limbs& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0u);
    a[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
    if (carry == 0 && i >= b.size()) return;
  }
  if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

// |a| -= |b|, requires |a| >= |b|
void mag_sub(Limbs& a, const Limbs& b) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
    borrow = 0;
    if (s < 0) {
      s += static_cast<std::int64_t>(kBase);
      borrow = 1;
    }
    a[i] = static_cast<std::uint32_t>(s);
    if (borrow == 0 && i >= b.size()) break;
  }
  trim_limbs(a);
}

Limbs mag_mul(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  Limbs r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = r[i + j] + carry + ai * b[j];
      r[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    r[i + b.size()] = static_cast<std::uint32_t>(carry);
  }
  trim_limbs(r);
  return r;
}

std::uint32_t mag_divmod_small(Limbs& a, std::uint32_t d) {
  std::uint64_t rem = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | a[i];
    a[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  trim_limbs(a);
  return static_cast<std::uint32_t>(rem);
}

// Knuth algorithm D. Returns quotient, leaves remainder in u.
Limbs mag_divmod(Limbs& u, const Limbs& v) {
  const std::size_t n = v.size();
  if (n == 1) {
    std::uint32_t r = mag_divmod_small(u, v[0]);
    Limbs q = std::move(u);
    u = r ? Limbs{r} : Limbs{};
    return q;
  }
  const std::size_t m = u.size() - n;
  // Normalize so the top limb of v has its high bit set.
  int shift = 0;
  for (std::uint32_t top = v.back(); !(top & 0x80000000u); top <<= 1) ++shift;
  auto shl = [&](const Limbs& x) {
    Limbs r(x.size() + 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      r[i] |= static_cast<std::uint32_t>((static_cast<std::uint64_t>(x[i]) << shift));
      r[i + 1] = shift ? static_cast<std::uint32_t>(x[i] >> (32 - shift)) : 0u;
    }
    return r;
  };
  Limbs un = shl(u);
  Limbs vn = shl(v);
  vn.resize(n);  // normalized divisor, same limb count
  un.resize(u.size() + 1);

  Limbs q(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
    std::uint64_t qhat = num / vn[n - 1];
    std::uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase ||
           qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }
    // Multiply-subtract qhat*vn from un[j..j+n].
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * vn[i] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                       static_cast<std::int64_t>(p & 0xffffffffu);
      borrow = 0;
      if (t < 0) {
        t += static_cast<std::int64_t>(kBase);
        borrow = 1;
      }
      un[i + j] = static_cast<std::uint32_t>(t);
    }
    std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow -
                     static_cast<std::int64_t>(carry);
    if (t < 0) {
      // qhat was one too large: add back.
      t += static_cast<std::int64_t>(kBase);
      --qhat;
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = c + un[i + j] + vn[i];
        un[i + j] = static_cast<std::uint32_t>(s);
        c = s >> 32;
      }
      t += static_cast<std::int64_t>(c);
    }
    un[j + n] = static_cast<std::uint32_t>(t);
    q[j] = static_cast<std::uint32_t>(qhat);
  }
  // Denormalize remainder.
  Limbs r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = un[i] >> shift;
    if (shift && i + 1 < un.size())
      r[i] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(un[i + 1]) << (32 - shift));
  }
  trim_limbs(r);
  trim_limbs(q);
  u = std::move(r);
  return q;
}

}  // namespace

Int::Int(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  auto mag = static_cast<std::uint64_t>(v < 0 ? -(v + 1) : v);
  if (v < 0) ++mag;  // avoids overflow at LLONG_MIN
  limbs_.push_back(static_cast<std::uint32_t>(mag));
  if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

Int Int::from_string(std::string_view text) {
  bool neg = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("Int: empty numeral");
  Int r;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("Int: bad digit in numeral");
    // r = r*10 + digit, on limbs directly
    std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
    for (auto& limb : r.limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
  }
  trim_limbs(r.limbs_);
  r.sign_ = r.limbs_.empty() ? 0 : (neg ? -1 : 1);
  return r;
}

bool Int::is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

bool Int::fits_i64() const {
  if (limbs_.size() < 2) return true;
  if (limbs_.size() > 2) return false;
  std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return sign_ < 0 ? mag <= (1ull << 63) : mag < (1ull << 63);
}

std::int64_t Int::to_i64() const {
  std::uint64_t mag = 0;
  if (!limbs_.empty()) mag = limbs_[0];
  if (limbs_.size() > 1) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return sign_ < 0 ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

std::string Int::to_string() const {
  if (sign_ == 0) return "0";
  Limbs work = limbs_;
  std::string digits;
  while (!work.empty()) {
    std::uint32_t chunk = mag_divmod_small(work, 1000000000u);
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int Int::operator-() const {
  Int r = *this;
  r.sign_ = -r.sign_;
  return r;
}

Int Int::abs() const {
  Int r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

void Int::trim() {
  trim_limbs(limbs_);
  if (limbs_.empty()) sign_ = 0;
}

int Int::cmp_mag(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int Int::cmp(const Int& a, const Int& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int m = cmp_mag(a.limbs_, b.limbs_);
  return a.sign_ >= 0 ? m : -m;
}

Int& Int::operator+=(const Int& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (sign_ == o.sign_) {
    mag_add(limbs_, o.limbs_);
    return *this;
  }
  int m = cmp_mag(limbs_, o.limbs_);
  if (m == 0) return *this = Int();
  if (m > 0) {
    mag_sub(limbs_, o.limbs_);
  } else {
    Limbs tmp = o.limbs_;
    mag_sub(tmp, limbs_);
    limbs_ = std::move(tmp);
    sign_ = o.sign_;
  }
  return *this;
}

Int& Int::operator-=(const Int& o) {
  if (&o == this) return *this = Int();
  sign_ = -sign_;
  *this += o;
  sign_ = -sign_;
  return *this;
}

Int Int::mul(const Int& a, const Int& b) {
  Int r;
  if (a.sign_ == 0 || b.sign_ == 0) return r;
  r.limbs_ = mag_mul(a.limbs_, b.limbs_);
  r.sign_ = a.sign_ * b.sign_;
  return r;
}

Int& Int::operator*=(const Int& o) { return *this = mul(*this, o); }

std::pair<Int, Int> Int::divmod(const Int& a, const Int& b) {
  if (b.sign_ == 0) throw std::domain_error("Int: division by zero");
  if (a.sign_ == 0 || cmp_mag(a.limbs_, b.limbs_) < 0) return {Int(), a};
  if (a.limbs_.size() <= 2 && b.limbs_.size() <= 2 && a.fits_i64() && b.fits_i64()) {
    std::int64_t x = a.to_i64(), y = b.to_i64();
    return {Int(x / y), Int(x % y)};
  }
  Int q, r;
  Limbs u = a.limbs_;
  q.limbs_ = mag_divmod(u, b.limbs_);
  r.limbs_ = std::move(u);
  q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
  return {q, r};
}

std::pair<Int, Int> Int::fdivmod(const Int& a, const Int& b) {
  auto [q, r] = divmod(a, b);
  if (r.sign_ != 0 && r.sign_ != b.sign_) {
    q -= Int(1);
    r += b;
  }
  return {q, r};
}

Int& Int::operator/=(const Int& o) { return *this = divmod(*this, o).first; }
Int& Int::operator%=(const Int& o) { return *this = divmod(*this, o).second; }

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

Int abs(const Int& v) { return v.abs(); }

Int gcd(Int a, Int b) {
  a = a.abs();
  b = b.abs();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  while (!b.is_zero()) {
    if (a.fits_i64() && b.fits_i64()) {
      auto x = static_cast<std::uint64_t>(a.to_i64());
      auto y = static_cast<std::uint64_t>(b.to_i64());
      while (y != 0) {
        std::uint64_t r = x % y;
        x = y;
        y = r;
      }
      return Int(static_cast<long long>(x));
    }
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Int lcm(const Int& a, const Int& b) {
  if (a.is_zero() || b.is_zero()) return Int(0);
  return (a / gcd(a, b) * b).abs();
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
  // Invariants: r0 = x0*a + y0*b, r1 = x1*a + y1*b.
  Int r0 = a, r1 = b;
  Int x0(1), y0(0), x1(0), y1(1);
  while (!r1.is_zero()) {
    auto [q, r] = Int::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Int x2 = x0 - q * x1;
    Int y2 = y0 - q * y1;
    x0 = std::move(x1);
    y0 = std::move(y1);
    x1 = std::move(x2);
    y1 = std::move(y2);
  }
  if (r0.sign() < 0) {
    r0 = -r0;
    x0 = -x0;
    y0 = -y0;
  }
  return {r0, x0, y0};
}

Int isqrt(const Int& v) {
  if (v.sign() < 0) throw std::domain_error("isqrt: negative argument");
  if (v.is_zero()) return Int(0);
  if (v.fits_i64()) {
    auto n = static_cast<std::uint64_t>(v.to_i64());
    std::uint64_t x = n, y = (n + 1) / 2;
    while (y < x) {
      x = y;
      y = (x + n / x) / 2;
    }
    return Int(static_cast<long long>(x));
  }
  // Newton iteration from a safe upper bound.
  Int x = v, y = (v + Int(1)) / Int(2);
  while (y < x) {
    x = y;
    y = (x + v / x) / Int(2);
  }
  return x;
}

bool is_perfect_square(const Int& v, Int* root) {
  if (v.sign() < 0) return false;
  Int r = isqrt(v);
  if (r * r == v) {
    if (root) *root = r;
    return true;
  }
  return false;
}

}  // namespace mukai
