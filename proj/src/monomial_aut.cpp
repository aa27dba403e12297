#include "nclift/monomial_aut.hpp"

namespace nclift {

namespace {

// Solve psi * x = target modulo the exponent-group relations.
std::optional<IntVec> solve_exponent(const MonomialAlgebraSpec& spec, const IntMatrix& psi,
                                     const IntVec& target) {
  size_t n = spec.gens();
  std::vector<IntVec> relcols;
  for (size_t j = 0; j < n; ++j) {
    if (spec.generator_orders()[j] == 0) continue;
    IntVec col(n, 0);
    col[j] = spec.generator_orders()[j];
    relcols.push_back(col);
  }
  IntMatrix sys = psi.hstack(IntMatrix::from_columns(n, relcols));
  IntSolve s = solve_int(sys, target);
  if (!s.solvable) return std::nullopt;
  IntVec x(n);
  std::copy(s.particular.begin(), s.particular.begin() + n, x.begin());
  return spec.reduce_exponent(std::move(x));
}

}  // namespace

MonomialAut MonomialAut::make(MonomialAlgebraSpec::Ptr spec, std::vector<Phase> tau,
                              IntMatrix psi) {
  MonomialAut a;
  a.spec_ = std::move(spec);
  a.tau_ = std::move(tau);
  a.psi_ = std::move(psi);
  size_t n = a.spec_->gens();
  if (a.tau_.size() != n || a.psi_.rows() != n || a.psi_.cols() != n)
    throw input_error("automorphism data shape mismatch");
  for (size_t k = 0; k < n; ++k) {
    Int m = a.spec_->generator_orders()[k];
    if (m == 0) continue;
    if (!(m * a.tau_[k]).is_zero())
      throw input_error("automorphism phase violates exponent torsion");
    for (size_t j = 0; j < n; ++j) {
      Int v = mul_checked(m, a.psi_.at(j, k));
      Int mj = a.spec_->generator_orders()[j];
      if (mj == 0 ? v != 0 : v % mj != 0)
        throw input_error("automorphism substitution violates exponent torsion");
    }
  }
  std::vector<IntVec> inv_cols;
  for (size_t j = 0; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    auto x = solve_exponent(*a.spec_, a.psi_, e);
    if (!x) throw input_error("exponent substitution is not invertible");
    inv_cols.push_back(*x);
  }
  a.psi_inv_ = IntMatrix::from_columns(n, inv_cols);
  for (size_t j = 0; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    if (a.spec_->reduce_exponent(a.psi_inv_ * (a.psi_ * e)) != e ||
        a.spec_->reduce_exponent(a.psi_ * (a.psi_inv_ * e)) != e)
      throw input_error("exponent substitution is not invertible");
  }
  // relation preservation on generator pairs, checked as element identities
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < k; ++l) {
      IntVec ek(n, 0), el(n, 0);
      ek[k] = 1;
      el[l] = 1;
      Element uk = Element::monomial(a.spec_, Phase(), ek);
      Element ul = Element::monomial(a.spec_, Phase(), el);
      if (!(a.apply(uk * ul) == a.apply(uk) * a.apply(ul)))
        throw input_error("automorphism does not preserve the relations");
    }
  return a;
}

MonomialAut MonomialAut::identity(MonomialAlgebraSpec::Ptr spec) {
  size_t n = spec->gens();
  return make(std::move(spec), std::vector<Phase>(n), IntMatrix::identity(n));
}

MonomialAut MonomialAut::from_generator_images(MonomialAlgebraSpec::Ptr spec,
                                               const std::vector<MonomialUnit>& images) {
  size_t n = spec->gens();
  if (images.size() != n) throw input_error("one generator image required per generator");
  std::vector<Phase> tau(n);
  IntMatrix psi(n, n);
  for (size_t k = 0; k < n; ++k) {
    tau[k] = images[k].phase;
    if (images[k].exp.size() != n) throw input_error("generator image exponent mismatch");
    for (size_t j = 0; j < n; ++j) psi.at(j, k) = images[k].exp[j];
  }
  return make(std::move(spec), std::move(tau), std::move(psi));
}

Phase MonomialAut::tau_of(const IntVec& a) const {
  Phase p;
  for (size_t k = 0; k < tau_.size(); ++k)
    if (a[k] != 0) p += a[k] * tau_[k];
  return p;
}

std::pair<Phase, IntVec> MonomialAut::apply_monomial(const IntVec& a) const {
  return {tau_of(a), spec_->reduce_exponent(psi_ * a)};
}

Element MonomialAut::apply(const Element& x) const {
  if (!x.spec()->same_structure(*spec_)) throw input_error("automorphism spec mismatch");
  Element out(x.spec());
  for (const auto& [exp, c] : x.terms()) {
    auto [ph, img] = apply_monomial(exp);
    CycScalar coeff = c;
    if (!ph.is_zero())
      coeff = coeff * CycScalar::from_phase(ph, lcm_ll(spec_->conductor(), ph.den()));
    out = out + Element::monomial(x.spec(), coeff, img);
  }
  return out;
}

MonomialAut MonomialAut::compose(const MonomialAut& inner) const {
  if (!inner.spec_->same_structure(*spec_)) throw input_error("automorphism spec mismatch");
  // (this o inner)(u^a) = e^{2 pi i (tau_in(a) + tau_out(psi_in a))} u^{psi_out psi_in a}
  size_t n = spec_->gens();
  std::vector<Phase> tau(n);
  for (size_t k = 0; k < n; ++k) {
    IntVec e(n, 0);
    e[k] = 1;
    tau[k] = inner.tau_[k] + tau_of(inner.psi_ * e);
  }
  return make(spec_, std::move(tau), psi_ * inner.psi_);
}

MonomialAut MonomialAut::inverse() const {
  size_t n = spec_->gens();
  std::vector<Phase> tau(n);
  for (size_t k = 0; k < n; ++k) {
    IntVec e(n, 0);
    e[k] = 1;
    tau[k] = -tau_of(psi_inv_ * e);
  }
  return make(spec_, std::move(tau), psi_inv_);
}

bool MonomialAut::equal(const MonomialAut& other) const {
  if (!other.spec_->same_structure(*spec_)) return false;
  size_t n = spec_->gens();
  for (size_t k = 0; k < n; ++k) {
    IntVec e(n, 0);
    e[k] = 1;
    auto [p1, x1] = apply_monomial(e);
    auto [p2, x2] = other.apply_monomial(e);
    if (!(p1 == p2) || x1 != x2) return false;
  }
  return true;
}

bool MonomialAut::is_identity() const { return equal(identity(spec_)); }

bool MonomialAut::fixes(const std::vector<IntVec>& exponents) const {
  for (const IntVec& e : exponents) {
    auto [p, x] = apply_monomial(e);
    if (!p.is_zero() || x != spec_->reduce_exponent(IntVec(e))) return false;
  }
  return true;
}

MonomialAut conjugation_by_monomial(const MonomialAlgebraSpec::Ptr& spec, const IntVec& s_exp) {
  size_t n = spec->gens();
  IntVec se = spec->reduce_exponent(IntVec(s_exp));
  Element s = Element::monomial(spec, Phase(), se);
  auto [iphase, iexp] = spec->monomial_inverse(se);
  Element sinv = Element::monomial(spec, iphase, iexp);
  std::vector<MonomialUnit> images;
  for (size_t k = 0; k < n; ++k) {
    IntVec e(n, 0);
    e[k] = 1;
    Element img = sinv * Element::monomial(spec, Phase(), e) * s;
    auto unit = as_monomial_unit(img);
    if (!unit) throw input_error("conjugation did not produce a monomial");
    images.push_back(*unit);
  }
  return MonomialAut::from_generator_images(spec, images);
}

}  // namespace nclift
