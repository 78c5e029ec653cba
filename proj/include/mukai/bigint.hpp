#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>
#include <iosfwd>

namespace mukai {

/// Arbitrary-precision signed integer (sign + base-2^32 magnitude).
/// Values are immutable in spirit: every operation returns a fresh value,
/// so Int is safe to share across threads.
class Int {
 public:
  Int() = default;
  Int(long long v);  // NOLINT(google-explicit-constructor), Scalar(0) must work
  static Int from_string(std::string_view text);  // decimal, optional '-'

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_one() const;
  bool odd() const { return sign_ != 0 && (limbs_[0] & 1u); }

  bool fits_i64() const;
  std::int64_t to_i64() const;  // precondition: fits_i64()
  std::string to_string() const;

  Int operator-() const;
  Int abs() const;

  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);
  Int& operator/=(const Int& o);  // truncated toward zero
  Int& operator%=(const Int& o);  // sign follows dividend

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(const Int& a, const Int& b) { return mul(a, b); }
  friend Int operator/(const Int& a, const Int& b) { return divmod(a, b).first; }
  friend Int operator%(const Int& a, const Int& b) { return divmod(a, b).second; }

  /// Truncated division: q = trunc(a/b), r = a - q*b (|r| < |b|, sign of a).
  static std::pair<Int, Int> divmod(const Int& a, const Int& b);
  /// Floor division: q = floor(a/b), 0 <= r < |b| when b > 0.
  static std::pair<Int, Int> fdivmod(const Int& a, const Int& b);

  friend bool operator==(const Int& a, const Int& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    return cmp(a, b) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Int& v);

 private:
  static Int mul(const Int& a, const Int& b);
  static int cmp(const Int& a, const Int& b);
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  void trim();

  std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros
  int sign_ = 0;                      // -1, 0, +1; zero iff limbs_ empty
};

Int abs(const Int& v);
Int gcd(Int a, Int b);     // >= 0
Int lcm(const Int& a, const Int& b);
/// g = a*x + b*y with g = gcd(a,b) >= 0.
struct ExtGcd { Int g, x, y; };
ExtGcd ext_gcd(const Int& a, const Int& b);
/// Largest s with s^2 <= v. Precondition: v >= 0.
Int isqrt(const Int& v);
bool is_perfect_square(const Int& v, Int* root = nullptr);

}  // namespace mukai
