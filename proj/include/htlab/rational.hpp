#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace htlab {

/// Signed arbitrary-precision integer with an inline int64 fast path.
/// Values that fit in 64 bits never allocate; wider values spill into a
/// little-endian base-2^32 magnitude.
class Int {
 public:
  Int() = default;
  Int(long long v) : small_(v) {}  // NOLINT: implicit by design
  static Int from_string(std::string_view s);

  bool is_zero() const { return big_ ? mag_.empty() : small_ == 0; }
  bool is_negative() const { return sign() < 0; }
  int sign() const;
  bool is_small() const { return !big_; }
  long long small_value() const { return small_; }  // valid only when is_small()

  Int operator-() const;
  Int operator+(const Int& o) const;
  Int operator-(const Int& o) const;
  Int operator*(const Int& o) const;

  /// Truncated division (quotient rounds toward zero).
  static void divmod(const Int& a, const Int& b, Int& q, Int& r);
  Int operator/(const Int& o) const;
  Int operator%(const Int& o) const;

  static Int gcd(const Int& a, const Int& b);
  Int abs() const;

  int compare(const Int& o) const;
  bool operator==(const Int& o) const { return compare(o) == 0; }
  bool operator!=(const Int& o) const { return compare(o) != 0; }
  bool operator<(const Int& o) const { return compare(o) < 0; }
  bool operator<=(const Int& o) const { return compare(o) <= 0; }
  bool operator>(const Int& o) const { return compare(o) > 0; }
  bool operator>=(const Int& o) const { return compare(o) >= 0; }

  std::string str() const;

  static Int from_i128(__int128 v);

 private:
  // big_ == false: value is small_. big_ == true: value is sign_ * mag_,
  // mag_ little-endian base 2^32 with no leading zero limb, never empty.
  bool big_ = false;
  long long small_ = 0;
  int sign_ = 0;
  std::vector<uint32_t> mag_;

  std::vector<uint32_t> magnitude() const;
  static Int make_big(int sign, std::vector<uint32_t> mag);

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

/// Rational number in lowest terms, denominator > 0. All arithmetic is exact.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rat(long long num, long long den);
  Rat(Int num, Int den);
  static Rat from_string(std::string_view s);  // "a/b" or "a"

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == Int(1) && den_ == Int(1); }
  bool is_integer() const { return den_ == Int(1); }
  int sign() const { return num_.sign(); }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
  Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
  Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  Rat inv() const;
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  int compare(const Rat& o) const;
  bool operator==(const Rat& o) const;
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return compare(o) < 0; }
  bool operator>(const Rat& o) const { return compare(o) > 0; }
  bool operator<=(const Rat& o) const { return compare(o) <= 0; }
  bool operator>=(const Rat& o) const { return compare(o) >= 0; }

  /// Canonical form: "num" when den == 1, else "num/den".
  std::string str() const;

 private:
  Int num_, den_;

  // both small: fast path helpers
  bool both_small(const Rat& o) const { return num_.is_small() && den_.is_small() && o.num_.is_small() && o.den_.is_small(); }
  static Rat make_from_i128(__int128 num, __int128 den);
  void reduce();
};

}  // namespace htlab
