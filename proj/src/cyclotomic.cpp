#include "nclift/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace nclift {

namespace {

using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Quotient of a by b; the remainder is left in a.
Poly poly_divmod(Poly& a, const Poly& b) {
  Poly q;
  if (b.empty()) throw input_error("polynomial division by zero");
  if (a.size() < b.size()) {
    poly_trim(a);
    return q;
  }
  q.assign(a.size() - b.size() + 1, Rat(0));
  const Rat lead = b.back();
  for (size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    size_t top = shift + b.size() - 1;
    if (a[top].is_zero()) continue;
    Rat f = a[top] / lead;
    q[shift] = f;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
  }
  poly_trim(a);
  poly_trim(q);
  return q;
}

}  // namespace

std::vector<Rat> CycScalar::cyclotomic_poly(Int n) {
  static std::mutex mtx;
  static std::map<Int, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 = prod_{d | n} Phi_d; divide out the proper divisors.
  Poly p(static_cast<size_t>(n) + 1, Rat(0));
  p[0] = Rat(-1);
  p.back() = Rat(1);
  for (Int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly phi_d = cyclotomic_poly(d);
    Poly dividend = p;
    p = poly_divmod(dividend, phi_d);
  }
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(n, p);
  return p;
}

std::pair<CycScalar, CycScalar> CycScalar::unify(const CycScalar& a, const CycScalar& b) {
  if (a.conductor_ == b.conductor_) return {a, b};
  Int n = lcm_ll(a.conductor_, b.conductor_);
  return {a.embedded(n), b.embedded(n)};
}

CycScalar CycScalar::embedded(Int new_conductor) const {
  if (new_conductor == conductor_) return *this;
  if (new_conductor % conductor_ != 0)
    throw input_error("conductor embedding requires divisibility");
  Int step = new_conductor / conductor_;
  CycScalar r = zero(new_conductor);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    CycScalar t = root_power(new_conductor, static_cast<Int>(i) * step);
    r += t * CycScalar(coeffs_[i], new_conductor);
  }
  return r;
}

void CycScalar::reduce() {
  trim();
  if (coeffs_.empty()) return;
  Poly phi = cyclotomic_poly(conductor_);
  if (coeffs_.size() >= phi.size()) poly_divmod(coeffs_, phi);
  trim();
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw input_error("inverse of zero scalar");
  // Extended gcd of coeffs_ and Phi_N over Q[x]: s*f + t*Phi = gcd = const.
  Poly r0 = cyclotomic_poly(conductor_), r1 = coeffs_;
  Poly s0 = {}, s1 = {Rat(1)};
  poly_trim(r1);
  while (r1.size() > 1) {
    Poly rem = r0;
    Poly q = poly_divmod(rem, r1);
    Poly qs;
    if (!q.empty() && !s1.empty()) {
      qs.assign(q.size() + s1.size() - 1, Rat(0));
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    Poly s_next = s0;
    if (qs.size() > s_next.size()) s_next.resize(qs.size(), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) s_next[i] -= qs[i];
    poly_trim(s_next);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
    if (r1.empty()) throw input_error("scalar not invertible");
  }
  Rat c = r1[0];
  CycScalar inv;
  inv.conductor_ = conductor_;
  inv.coeffs_ = s1;
  for (auto& x : inv.coeffs_) x /= c;
  inv.reduce();
  return inv;
}

std::string CycScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].str();
    if (i > 0) os << "*z" << conductor_ << "^" << i;
  }
  return os.str();
}

}  // namespace nclift
