#ifndef NCLIFT_RAT_HPP
#define NCLIFT_RAT_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nclift {

using Int = long long;

/// Thrown when a computation leaves the exactly representable range.
struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown for arguments that violate an operation's preconditions.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an enumeration bound is exceeded.
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown for inputs outside the implemented fragment.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline Int checked_narrow(__int128 v, const char* what) {
  if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
    throw overflow_error(what);
  return static_cast<Int>(v);
}
}  // namespace detail

inline Int mul_checked(Int a, Int b) {
  return detail::checked_narrow(static_cast<__int128>(a) * b, "integer product overflow");
}

inline Int add_checked(Int a, Int b) {
  return detail::checked_narrow(static_cast<__int128>(a) + b, "integer sum overflow");
}

inline Int gcd_ll(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline Int lcm_ll(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return mul_checked(a / gcd_ll(a, b), b);
}

/// Exact rational number, always stored with gcd(|num|, den) = 1 and den >= 1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(n), den_(1) {}
  Rat(Int n, Int d) { assign(n, d); }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const { return Rat(-num_, den_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw input_error("rational division by zero");
    __int128 n = static_cast<__int128>(a.num_) * b.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return from_wide(n, d);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

  /// Serializes as "p/q", with "/q" omitted for integers.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }

 private:
  static Rat from_wide(__int128 n, __int128 d) {
    if (d == 0) throw input_error("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = wide_gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = detail::checked_narrow(n, "rational numerator overflow");
    r.den_ = detail::checked_narrow(d, "rational denominator overflow");
    return r;
  }
  static __int128 wide_gcd(__int128 a, __int128 b) {
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }
  void assign(Int n, Int d) {
    *this = from_wide(n, d);
  }

  Int num_;
  Int den_;
};

}  // namespace nclift

#endif
