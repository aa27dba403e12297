#ifndef NCLIFT_CYCLOTOMIC_HPP
#define NCLIFT_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "nclift/phase.hpp"
#include "nclift/rat.hpp"

namespace nclift {

/// Exact element of the cyclotomic field Q(zeta_N), stored as a polynomial in
/// a primitive N-th root of unity reduced modulo the N-th cyclotomic
/// polynomial. Binary operations between different conductors lift both
/// operands into the compositum Q(zeta_lcm).
class CycScalar {
 public:
  CycScalar() : conductor_(1), coeffs_{} {}
  explicit CycScalar(const Rat& r, Int conductor = 1) : conductor_(conductor) {
    if (!r.is_zero()) coeffs_ = {r};
    reduce();
  }

  static CycScalar zero(Int conductor = 1) { return CycScalar(Rat(0), conductor); }
  static CycScalar one(Int conductor = 1) { return CycScalar(Rat(1), conductor); }

  /// zeta_N^k for the given conductor N.
  static CycScalar root_power(Int conductor, Int k) {
    k %= conductor;
    if (k < 0) k += conductor;
    CycScalar c;
    c.conductor_ = conductor;
    c.coeffs_.assign(static_cast<size_t>(k) + 1, Rat(0));
    c.coeffs_.back() = Rat(1);
    c.reduce();
    return c;
  }

  /// e^{2*pi*i*p/q} as an element of Q(zeta_N); requires q | N.
  static CycScalar from_phase(const Phase& p, Int conductor) {
    if (conductor % p.den() != 0)
      throw input_error("phase denominator does not divide the conductor");
    return root_power(conductor, p.value().num() * (conductor / p.den()));
  }

  Int conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Rat(1); }

  bool is_rational() const { return coeffs_.size() <= 1; }
  Rat rational_value() const {
    if (coeffs_.empty()) return Rat(0);
    if (coeffs_.size() == 1) return coeffs_[0];
    throw input_error("scalar is not rational");
  }

  friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    auto [x, y] = unify(a, b);
    if (y.coeffs_.size() > x.coeffs_.size()) x.coeffs_.resize(y.coeffs_.size());
    for (size_t i = 0; i < y.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    x.trim();
    return x;
  }
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }
  CycScalar operator-() const {
    CycScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    auto [x, y] = unify(a, b);
    if (x.is_zero() || y.is_zero()) return zero(x.conductor_);
    std::vector<Rat> prod(x.coeffs_.size() + y.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i)
      for (size_t j = 0; j < y.coeffs_.size(); ++j)
        if (!x.coeffs_[i].is_zero() && !y.coeffs_[j].is_zero())
          prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    CycScalar r;
    r.conductor_ = x.conductor_;
    r.coeffs_ = std::move(prod);
    r.reduce();
    return r;
  }
  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

  /// Complex conjugation, zeta -> zeta^{-1}.
  CycScalar conj() const {
    CycScalar r = zero(conductor_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      CycScalar t = root_power(conductor_, -static_cast<Int>(i));
      t = t * CycScalar(coeffs_[i], conductor_);
      r += t;
    }
    return r;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against the
  /// cyclotomic polynomial.
  CycScalar inverse() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b) {
    auto [x, y] = unify(a, b);
    return x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  std::string str() const;

  /// Coefficient vector of x^N - 1 divided by all lower cyclotomic factors.
  static std::vector<Rat> cyclotomic_poly(Int n);

 private:
  static std::pair<CycScalar, CycScalar> unify(const CycScalar& a, const CycScalar& b);
  CycScalar embedded(Int new_conductor) const;
  void reduce();
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Int conductor_;
  std::vector<Rat> coeffs_;  // degree < phi(conductor) after reduce()
};

}  // namespace nclift

#endif
