#ifndef NCLIFT_PHASE_HPP
#define NCLIFT_PHASE_HPP

#include <functional>
#include <string>

#include "nclift/rat.hpp"

namespace nclift {

/// Element of Q/Z, written additively; the value p/q stands for the unit
/// scalar e^{2*pi*i*p/q}. The representative is kept in [0, 1).
class Phase {
 public:
  Phase() = default;
  explicit Phase(const Rat& r) : value_(reduce(r)) {}
  Phase(Int num, Int den) : value_(reduce(Rat(num, den))) {}

  const Rat& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  Int den() const { return value_.den(); }

  /// Order of the phase as a group element of Q/Z.
  Int order() const { return value_.den(); }

  friend Phase operator+(const Phase& a, const Phase& b) { return Phase(a.value_ + b.value_); }
  friend Phase operator-(const Phase& a, const Phase& b) { return Phase(a.value_ - b.value_); }
  Phase operator-() const { return Phase(-value_); }
  Phase& operator+=(const Phase& o) { return *this = *this + o; }
  Phase& operator-=(const Phase& o) { return *this = *this - o; }

  /// Integer scaling n * (p/q) in Q/Z.
  friend Phase operator*(Int n, const Phase& p) { return Phase(Rat(n) * p.value_); }

  friend bool operator==(const Phase& a, const Phase& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }
  friend bool operator<(const Phase& a, const Phase& b) { return a.value_ < b.value_; }

  std::string str() const { return value_.str(); }
  static Phase parse(const std::string& s) { return Phase(Rat::parse(s)); }

 private:
  static Rat reduce(const Rat& r) {
    Int n = r.num() % r.den();
    if (n < 0) n += r.den();
    return Rat(n, r.den());
  }

  Rat value_;
};

}  // namespace nclift

template <>
struct std::hash<nclift::Phase> {
  size_t operator()(const nclift::Phase& p) const {
    return std::hash<long long>()(p.value().num()) * 1000003u ^
           std::hash<long long>()(p.value().den());
  }
};

#endif
