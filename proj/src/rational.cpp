#include "htlab/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace htlab {

namespace {

constexpr long long kI64Min = INT64_MIN;

unsigned __int128 uabs128(__int128 v) {
  return v < 0 ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_i64(__int128 v) { return v >= static_cast<__int128>(INT64_MIN) && v <= static_cast<__int128>(INT64_MAX); }

std::vector<uint32_t> mag_from_u128(unsigned __int128 v) {
  std::vector<uint32_t> m;
  while (v != 0) {
    m.push_back(static_cast<uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
  return m;
}

}  // namespace

int Int::sign() const {
  if (big_) return sign_;
  return small_ > 0 ? 1 : (small_ < 0 ? -1 : 0);
}

std::vector<uint32_t> Int::magnitude() const {
  if (big_) return mag_;
  return mag_from_u128(uabs128(small_));
}

Int Int::make_big(int sign, std::vector<uint32_t> mag) {
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
  Int r;
  if (mag.empty()) return r;
  if (mag.size() <= 2) {
    uint64_t v = mag[0];
    if (mag.size() == 2) v |= static_cast<uint64_t>(mag[1]) << 32;
    if (v <= static_cast<uint64_t>(INT64_MAX)) {
      r.small_ = sign < 0 ? -static_cast<long long>(v) : static_cast<long long>(v);
      return r;
    }
    if (sign < 0 && v == static_cast<uint64_t>(INT64_MAX) + 1) {
      r.small_ = kI64Min;
      return r;
    }
  }
  r.big_ = true;
  r.sign_ = sign;
  r.mag_ = std::move(mag);
  return r;
}

Int Int::from_i128(__int128 v) {
  if (fits_i64(v)) return Int(static_cast<long long>(v));
  return make_big(v < 0 ? -1 : 1, mag_from_u128(uabs128(v)));
}

Int Int::operator-() const {
  if (!big_) {
    if (small_ != kI64Min) return Int(-small_);
    return make_big(1, mag_from_u128(uabs128(small_)));
  }
  Int r = *this;
  r.sign_ = -r.sign_;
  return r;
}

int Int::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> Int::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r(big.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < big.size(); ++i) {
    uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
    r[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  r[big.size()] = static_cast<uint32_t>(carry);
  return r;
}

// requires |a| >= |b|
std::vector<uint32_t> Int::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (s < 0) {
      s += (1LL << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(s);
  }
  return r;
}

std::vector<uint32_t> Int::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t s = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t s = r[k] + carry;
      r[k] = static_cast<uint32_t>(s);
      carry = s >> 32;
      ++k;
    }
  }
  return r;
}

// simple bitwise long division; big operands are rare and modest in size
void Int::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                     std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (b.empty()) throw std::domain_error("Int: division by zero");
  q.assign(a.size(), 0);
  r.clear();
  for (size_t limb = a.size(); limb-- > 0;) {
    for (int bit = 31; bit >= 0; --bit) {
      // r = (r << 1) | bit
      uint32_t carry = (a[limb] >> bit) & 1u;
      for (size_t i = 0; i < r.size(); ++i) {
        uint32_t next = r[i] >> 31;
        r[i] = (r[i] << 1) | carry;
        carry = next;
      }
      if (carry) r.push_back(carry);
      while (!r.empty() && r.back() == 0) r.pop_back();
      if (cmp_mag(r, b) >= 0) {
        r = sub_mag(r, b);
        while (!r.empty() && r.back() == 0) r.pop_back();
        q[limb] |= 1u << bit;
      }
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
}

Int Int::operator+(const Int& o) const {
  if (!big_ && !o.big_) {
    long long r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) return Int(r);
    return from_i128(static_cast<__int128>(small_) + o.small_);
  }
  int sa = sign(), sb = o.sign();
  if (sa == 0) return o;
  if (sb == 0) return *this;
  auto ma = magnitude(), mb = o.magnitude();
  if (sa == sb) return make_big(sa, add_mag(ma, mb));
  int c = cmp_mag(ma, mb);
  if (c == 0) return Int(0);
  if (c > 0) return make_big(sa, sub_mag(ma, mb));
  return make_big(sb, sub_mag(mb, ma));
}

Int Int::operator-(const Int& o) const { return *this + (-o); }

Int Int::operator*(const Int& o) const {
  if (!big_ && !o.big_) {
    long long r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) return Int(r);
    return from_i128(static_cast<__int128>(small_) * o.small_);
  }
  int s = sign() * o.sign();
  if (s == 0) return Int(0);
  return make_big(s, mul_mag(magnitude(), o.magnitude()));
}

void Int::divmod(const Int& a, const Int& b, Int& q, Int& r) {
  if (b.is_zero()) throw std::domain_error("Int: division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == kI64Min && b.small_ == -1)) {
    q = Int(a.small_ / b.small_);
    r = Int(a.small_ % b.small_);
    return;
  }
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.magnitude(), b.magnitude(), qm, rm);
  q = make_big(a.sign() * b.sign(), std::move(qm));
  r = make_big(a.sign(), std::move(rm));
}

Int Int::operator/(const Int& o) const {
  Int q, r;
  divmod(*this, o, q, r);
  return q;
}

Int Int::operator%(const Int& o) const {
  Int q, r;
  divmod(*this, o, q, r);
  return r;
}

Int Int::abs() const { return sign() < 0 ? -*this : *this; }

Int Int::gcd(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small()) {
    unsigned __int128 g = gcd_u128(uabs128(a.small_), uabs128(b.small_));
    return from_i128(static_cast<__int128>(g));
  }
  Int x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    Int q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x;
}

int Int::compare(const Int& o) const {
  if (!big_ && !o.big_) return small_ < o.small_ ? -1 : (small_ > o.small_ ? 1 : 0);
  int sa = sign(), sb = o.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  int c = cmp_mag(magnitude(), o.magnitude());
  return sa >= 0 ? c : -c;
}

std::string Int::str() const {
  if (!big_) return std::to_string(small_);
  std::vector<uint32_t> m = mag_;
  std::string digits;
  const std::vector<uint32_t> ten9 = {1000000000u};
  while (!m.empty()) {
    std::vector<uint32_t> q, r;
    divmod_mag(m, ten9, q, r);
    uint32_t chunk = r.empty() ? 0 : r[0];
    m = q;
    std::string part = std::to_string(chunk);
    if (!m.empty()) part.insert(0, 9 - part.size(), '0');
    digits.insert(0, part);
  }
  if (digits.empty()) digits = "0";
  return (sign_ < 0 ? "-" : "") + digits;
}

Int Int::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Int: empty string");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("Int: no digits");
  Int v(0);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Int: bad digit");
    v = v * Int(10) + Int(s[i] - '0');
  }
  return neg ? -v : v;
}

// ---------------------------------------------------------------------------

Rat::Rat(long long num, long long den) : num_(num), den_(den) { reduce(); }

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

void Rat::reduce() {
  if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
  if (num_.is_zero()) {
    den_ = Int(1);
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = Int::gcd(num_, den_);
  if (g != Int(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rat Rat::make_from_i128(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  if (num == 0) return Rat();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  unsigned __int128 g = gcd_u128(uabs128(num), uabs128(den));
  num = num / static_cast<__int128>(g);
  den = den / static_cast<__int128>(g);
  Rat r;
  r.num_ = Int::from_i128(num);
  r.den_ = Int::from_i128(den);
  return r;
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  // integer fast path: no gcd needed
  if (den_.is_small() && den_.small_value() == 1 && o.den_.is_small() && o.den_.small_value() == 1 &&
      num_.is_small() && o.num_.is_small()) {
    long long s;
    if (!__builtin_add_overflow(num_.small_value(), o.num_.small_value(), &s)) {
      Rat r;
      r.num_ = Int(s);
      return r;
    }
  }
  if (both_small(o)) {
    __int128 n = static_cast<__int128>(num_.small_value()) * o.den_.small_value() +
                 static_cast<__int128>(o.num_.small_value()) * den_.small_value();
    __int128 d = static_cast<__int128>(den_.small_value()) * o.den_.small_value();
    return make_from_i128(n, d);
  }
  return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::operator*(const Rat& o) const {
  if (is_zero() || o.is_zero()) return Rat();
  // integer fast path: no gcd needed
  if (den_.is_small() && den_.small_value() == 1 && o.den_.is_small() && o.den_.small_value() == 1 &&
      num_.is_small() && o.num_.is_small()) {
    long long s;
    if (!__builtin_mul_overflow(num_.small_value(), o.num_.small_value(), &s)) {
      Rat r;
      r.num_ = Int(s);
      return r;
    }
  }
  if (both_small(o)) {
    __int128 n = static_cast<__int128>(num_.small_value()) * o.num_.small_value();
    __int128 d = static_cast<__int128>(den_.small_value()) * o.den_.small_value();
    return make_from_i128(n, d);
  }
  return Rat(num_ * o.num_, den_ * o.den_);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  if (is_zero()) return Rat();
  if (both_small(o)) {
    __int128 n = static_cast<__int128>(num_.small_value()) * o.den_.small_value();
    __int128 d = static_cast<__int128>(den_.small_value()) * o.num_.small_value();
    return make_from_i128(n, d);
  }
  return Rat(num_ * o.den_, den_ * o.num_);
}

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(den_, num_);
}

bool Rat::operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }

int Rat::compare(const Rat& o) const {
  // cross-multiply; denominators are positive
  return (num_ * o.den_).compare(o.num_ * den_);
}

std::string Rat::str() const {
  if (den_ == Int(1)) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rat Rat::from_string(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(Int::from_string(s), Int(1));
  return Rat(Int::from_string(s.substr(0, slash)), Int::from_string(s.substr(slash + 1)));
}

}  // namespace htlab
