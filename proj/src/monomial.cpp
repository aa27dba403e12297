#include "nclift/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace nclift {

MonomialAlgebraSpec::Ptr MonomialAlgebraSpec::make(IntVec generator_orders,
                                                   std::vector<std::vector<Phase>> theta,
                                                   std::vector<Correction> corrections,
                                                   Int conductor) {
  auto s = std::shared_ptr<MonomialAlgebraSpec>(new MonomialAlgebraSpec());
  s->orders_ = std::move(generator_orders);
  s->theta_ = std::move(theta);
  s->corrections_ = std::move(corrections);
  s->conductor_ = conductor;
  size_t n = s->orders_.size();
  if (s->theta_.size() != n) throw input_error("theta must be square of the generator count");
  for (auto& row : s->theta_)
    if (row.size() != n) throw input_error("theta must be square of the generator count");
  for (size_t k = 0; k < n; ++k) {
    if (!s->theta_[k][k].is_zero()) throw input_error("theta diagonal must vanish");
    for (size_t l = 0; l < k; ++l) {
      if (!(s->theta_[k][l] + s->theta_[l][k]).is_zero()) throw input_error("theta must be skew");
      if (conductor % s->theta_[k][l].den() != 0)
        throw input_error("conductor must absorb all theta denominators");
    }
  }
  // correction generators must be central: zero theta row, no self-corrections
  std::vector<bool> in_correction(n, false);
  for (const auto& c : s->corrections_) {
    if (c.k <= c.l || c.k >= n) throw input_error("corrections are indexed with k > l");
    if (c.vector.size() != n) throw input_error("correction vector length mismatch");
    for (size_t j = 0; j < n; ++j)
      if (c.vector[j] != 0) in_correction[j] = true;
  }
  for (size_t j = 0; j < n; ++j) {
    if (!in_correction[j]) continue;
    for (size_t k = 0; k < n; ++k)
      if (!s->theta_[j][k].is_zero())
        throw input_error("correction generator must have a zero theta row");
    for (const auto& c : s->corrections_)
      if (c.k == j || c.l == j)
        throw input_error("correction generator may not occur in a relation correction");
  }
  // torsion consistency
  for (size_t j = 0; j < n; ++j) {
    Int m = s->orders_[j];
    if (m == 0) continue;
    for (size_t k = 0; k < n; ++k)
      if (!(m * s->theta_[j][k]).is_zero())
        throw input_error("torsion generator requires integral m * theta");
    for (const auto& c : s->corrections_)
      if (c.k == j || c.l == j)
        for (size_t t = 0; t < n; ++t) {
          Int v = mul_checked(m, c.vector[t]);
          if (s->orders_[t] == 0 ? v != 0 : v % s->orders_[t] != 0)
            throw input_error("torsion generator requires vanishing m * correction");
        }
  }
  IntMatrix rel(n, n);
  for (size_t j = 0; j < n; ++j) rel.at(j, j) = s->orders_[j];
  s->egroup_ = FgAbelianGroup::from_relations(n, rel);
  if (s->egroup_->rank() != n)
    throw input_error("generator orders of 1 are not supported");
  return s;
}

IntVec MonomialAlgebraSpec::reduce_exponent(IntVec e) const {
  if (e.size() != gens()) throw input_error("exponent length mismatch");
  for (size_t j = 0; j < e.size(); ++j) {
    if (orders_[j] == 0) continue;
    e[j] %= orders_[j];
    if (e[j] < 0) e[j] += orders_[j];
  }
  return e;
}

Phase MonomialAlgebraSpec::comm_phase(const IntVec& a, const IntVec& b) const {
  Phase p;
  for (size_t k = 0; k < gens(); ++k) {
    if (a[k] == 0) continue;
    for (size_t l = 0; l < k; ++l) {
      if (b[l] == 0 || theta_[k][l].is_zero()) continue;
      p += mul_checked(a[k], b[l]) * theta_[k][l];
    }
  }
  return p;
}

IntVec MonomialAlgebraSpec::comm_correction(const IntVec& a, const IntVec& b) const {
  IntVec out(gens(), 0);
  for (const auto& c : corrections_) {
    Int f = mul_checked(a[c.k], b[c.l]);
    if (f == 0) continue;
    for (size_t j = 0; j < gens(); ++j)
      out[j] = add_checked(out[j], mul_checked(f, c.vector[j]));
  }
  return out;
}

std::pair<Phase, IntVec> MonomialAlgebraSpec::monomial_inverse(const IntVec& a) const {
  IntVec b(gens());
  for (size_t j = 0; j < gens(); ++j) b[j] = -a[j];
  // u^a u^b = e^{2 pi i c} u^{r} with r = corr(a, b) central; therefore
  // (u^a)^{-1} = e^{-2 pi i c} u^{b - r}.
  Phase c = comm_phase(a, b);
  IntVec r = comm_correction(a, b);
  IntVec inv(gens());
  for (size_t j = 0; j < gens(); ++j) inv[j] = b[j] - r[j];
  return {-c, reduce_exponent(std::move(inv))};
}

bool MonomialAlgebraSpec::exponent_is_central(const IntVec& a) const {
  for (size_t k = 0; k < gens(); ++k) {
    IntVec ek(gens(), 0);
    ek[k] = 1;
    if (!(comm_phase(a, ek) == comm_phase(ek, a))) return false;
    if (reduce_exponent(comm_correction(a, ek)) != reduce_exponent(comm_correction(ek, a)))
      return false;
  }
  return true;
}

IntMatrix MonomialAlgebraSpec::central_exponent_kernel() const {
  size_t n = gens();
  Int den = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) den = lcm_ll(den, theta_[i][j].den());
  std::vector<IntVec> rows;
  std::vector<Int> row_mod;
  for (size_t k = 0; k < n; ++k) {
    IntVec ek(n, 0);
    ek[k] = 1;
    IntVec pr(n, 0);
    bool nonzero = false;
    for (size_t i = 0; i < n; ++i) {
      IntVec ei(n, 0);
      ei[i] = 1;
      Phase diff = comm_phase(ei, ek) - comm_phase(ek, ei);
      pr[i] = diff.value().num() * (den / diff.value().den());
      nonzero |= pr[i] != 0;
    }
    if (nonzero) {
      rows.push_back(pr);
      row_mod.push_back(den);
    }
    for (size_t j = 0; j < n; ++j) {
      IntVec cr(n, 0);
      for (size_t i = 0; i < n; ++i) {
        IntVec ei(n, 0);
        ei[i] = 1;
        cr[i] = comm_correction(ei, ek)[j] - comm_correction(ek, ei)[j];
      }
      if (std::any_of(cr.begin(), cr.end(), [](Int v) { return v != 0; })) {
        rows.push_back(cr);
        row_mod.push_back(orders_[j]);
      }
    }
  }
  if (rows.empty()) return IntMatrix::identity(n);
  IntMatrix a(rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) a.at(i, j) = rows[i][j];
  std::vector<IntVec> relcols;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (row_mod[i] == 0) continue;
    IntVec col(rows.size(), 0);
    col[i] = row_mod[i];
    relcols.push_back(col);
  }
  IntMatrix sys = a.hstack(IntMatrix::from_columns(rows.size(), relcols));
  std::vector<IntVec> basis;
  for (const IntVec& k : int_kernel(sys)) {
    IntVec x(n);
    std::copy(k.begin(), k.begin() + n, x.begin());
    basis.push_back(x);
  }
  for (size_t j = 0; j < n; ++j) {
    if (orders_[j] == 0) continue;
    IntVec col(n, 0);
    col[j] = orders_[j];
    basis.push_back(col);
  }
  return IntMatrix::from_columns(n, basis);
}

bool MonomialAlgebraSpec::same_structure(const MonomialAlgebraSpec& other) const {
  if (this == &other) return true;
  if (orders_ != other.orders_ || conductor_ != other.conductor_) return false;
  for (size_t i = 0; i < gens(); ++i)
    for (size_t j = 0; j < gens(); ++j)
      if (!(theta_[i][j] == other.theta_[i][j])) return false;
  if (corrections_.size() != other.corrections_.size()) return false;
  for (size_t i = 0; i < corrections_.size(); ++i)
    if (corrections_[i].k != other.corrections_[i].k ||
        corrections_[i].l != other.corrections_[i].l ||
        corrections_[i].vector != other.corrections_[i].vector)
      return false;
  return true;
}

Element Element::unit(MonomialAlgebraSpec::Ptr spec) {
  Element e(spec);
  e.insert_term(IntVec(spec->gens(), 0), CycScalar::one(spec->conductor()));
  return e;
}

Element Element::monomial(MonomialAlgebraSpec::Ptr spec, CycScalar coeff, IntVec exp) {
  Element e(spec);
  e.insert_term(e.spec_->reduce_exponent(std::move(exp)), coeff);
  return e;
}

Element Element::monomial(MonomialAlgebraSpec::Ptr spec, const Phase& phase, IntVec exp) {
  Int cond = lcm_ll(spec->conductor(), phase.den());
  return monomial(std::move(spec), CycScalar::from_phase(phase, cond), std::move(exp));
}

void Element::insert_term(const IntVec& exp, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element operator+(const Element& a, const Element& b) {
  if (!a.spec_->same_structure(*b.spec_)) throw input_error("element spec mismatch");
  Element out = a;
  for (const auto& [exp, c] : b.terms_) out.insert_term(exp, c);
  return out;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element Element::operator-() const {
  Element out(spec_);
  for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, -c);
  return out;
}

Element operator*(const Element& a, const Element& b) {
  if (!a.spec_->same_structure(*b.spec_)) throw input_error("element spec mismatch");
  const auto& spec = *a.spec_;
  Element out(a.spec_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Phase ph = spec.comm_phase(ea, eb);
      IntVec corr = spec.comm_correction(ea, eb);
      IntVec exp(spec.gens());
      for (size_t j = 0; j < spec.gens(); ++j) exp[j] = ea[j] + eb[j] + corr[j];
      CycScalar coeff = ca * cb;
      if (!ph.is_zero())
        coeff = coeff * CycScalar::from_phase(ph, lcm_ll(spec.conductor(), ph.den()));
      out.insert_term(spec.reduce_exponent(std::move(exp)), coeff);
    }
  return out;
}

Element operator*(const CycScalar& c, const Element& x) {
  Element out(x.spec_);
  for (const auto& [exp, coeff] : x.terms_) out.insert_term(exp, c * coeff);
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (!a.spec_->same_structure(*b.spec_)) throw input_error("element spec mismatch");
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = a.terms_.begin();
  auto jt = b.terms_.begin();
  for (; it != a.terms_.end(); ++it, ++jt)
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  return true;
}

Element Element::star() const {
  Element out(spec_);
  for (const auto& [exp, c] : terms_) {
    auto [ph, inv_exp] = spec_->monomial_inverse(exp);
    CycScalar coeff = c.conj();
    if (!ph.is_zero())
      coeff = coeff * CycScalar::from_phase(ph, lcm_ll(spec_->conductor(), ph.den()));
    out.insert_term(inv_exp, coeff);
  }
  return out;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.str() << ")*u^(";
    for (size_t j = 0; j < exp.size(); ++j) os << (j ? "," : "") << exp[j];
    os << ")";
    first = false;
  }
  return os.str();
}

Element unit_to_element(const MonomialAlgebraSpec::Ptr& spec, const MonomialUnit& u) {
  return Element::monomial(spec, u.phase, u.exp);
}

std::optional<Phase> phase_of_scalar(const CycScalar& c) {
  Int n = c.conductor();
  for (Int k = 0; k < n; ++k)
    if (c == CycScalar::root_power(n, k)) return Phase(k, n);
  if (c == CycScalar::one(n)) return Phase();
  return std::nullopt;
}

std::optional<MonomialUnit> as_monomial_unit(const Element& x) {
  if (x.term_count() != 1) return std::nullopt;
  const auto& [exp, c] = *x.terms().begin();
  auto ph = phase_of_scalar(c);
  if (!ph) return std::nullopt;
  return MonomialUnit{*ph, exp};
}

Grading::Grading(MonomialAlgebraSpec::Ptr s, FgAbelianGroup::Ptr l, IntMatrix m)
    : spec(std::move(s)), lambda(std::move(l)), phi(std::move(m)) {
  if (phi.rows() != lambda->rank() || phi.cols() != spec->gens())
    throw input_error("grading matrix shape mismatch");
  for (size_t j = 0; j < spec->gens(); ++j) {
    Int m_j = spec->generator_orders()[j];
    if (m_j == 0) continue;
    IntVec img(lambda->rank());
    for (size_t i = 0; i < lambda->rank(); ++i) img[i] = mul_checked(m_j, phi.at(i, j));
    if (!lambda->element(img).is_zero())
      throw input_error("grading does not respect exponent torsion");
  }
}

GroupElement Grading::degree_of(const IntVec& exp) const { return lambda->element(phi * exp); }

bool Grading::kills_corrections() const {
  for (const auto& c : spec->corrections())
    if (!degree_of(c.vector).is_zero()) return false;
  return true;
}

std::optional<IntVec> Grading::exponent_in_degree(const GroupElement& lam) const {
  IntMatrix sys = phi.hstack(relation_lattice(*lambda));
  IntSolve s = solve_int(sys, lam.coords());
  if (!s.solvable) return std::nullopt;
  IntVec a(spec->gens());
  std::copy(s.particular.begin(), s.particular.begin() + spec->gens(), a.begin());
  return spec->reduce_exponent(std::move(a));
}

Element graded_component(const Element& x, const Grading& g, const GroupElement& lam) {
  Element out(x.spec());
  for (const auto& [exp, c] : x.terms())
    if (g.degree_of(exp) == lam) out = out + Element::monomial(x.spec(), c, exp);
  return out;
}

bool strong_grading_check(const Grading& g, const std::vector<GroupElement>& window) {
  for (const GroupElement& lam : window) {
    auto a = g.exponent_in_degree(lam);
    if (!a) return false;
    auto [ph, inv] = g.spec->monomial_inverse(*a);
    (void)ph;
    if (g.degree_of(inv) == -lam) continue;
    // look for b with phi(b) = -lam and a + b + corr(a, b) = 0
    // (linear in b: (I + C_a) b = -a with C_a the correction pairing of a)
    size_t n = g.spec->gens();
    size_t lr = g.lambda->rank();
    IntMatrix sys(n + lr, n);
    for (size_t j = 0; j < n; ++j) {
      IntVec ej(n, 0);
      ej[j] = 1;
      IntVec col = g.spec->comm_correction(*a, ej);
      for (size_t i = 0; i < n; ++i) sys.at(i, j) = col[i] + (i == j ? 1 : 0);
      for (size_t i = 0; i < lr; ++i) sys.at(n + i, j) = g.phi.at(i, j);
    }
    IntVec rhs(n + lr, 0);
    for (size_t i = 0; i < n; ++i) rhs[i] = -(*a)[i];
    IntVec neg = (-lam).coords();
    for (size_t i = 0; i < lr; ++i) rhs[n + i] = neg[i];
    std::vector<IntVec> relcols;
    IntMatrix erel = relation_lattice(*g.spec->exponent_group());
    for (size_t j = 0; j < erel.cols(); ++j) {
      IntVec col(n + lr, 0);
      for (size_t i = 0; i < n; ++i) col[i] = erel.at(i, j);
      relcols.push_back(col);
    }
    IntMatrix lrel = relation_lattice(*g.lambda);
    for (size_t j = 0; j < lrel.cols(); ++j) {
      IntVec col(n + lr, 0);
      for (size_t i = 0; i < lr; ++i) col[n + i] = lrel.at(i, j);
      relcols.push_back(col);
    }
    IntMatrix full = sys.hstack(IntMatrix::from_columns(n + lr, relcols));
    if (!solve_int(full, rhs).solvable) return false;
  }
  return true;
}

AlgebraWithGrading qtorus(const std::vector<std::vector<Phase>>& theta, size_t n) {
  if (n == 0) throw input_error("quantum torus needs at least one generator");
  Int cond = 1;
  for (const auto& row : theta)
    for (const Phase& p : row) cond = lcm_ll(cond, p.den());
  auto spec = MonomialAlgebraSpec::make(IntVec(n, 0), theta, {}, cond);
  auto lambda = FgAbelianGroup::from_orders({}, n);
  return AlgebraWithGrading{spec, Grading(spec, lambda, IntMatrix::identity(n))};
}

HeisenbergModel heisenberg() {
  std::vector<std::vector<Phase>> theta(3, std::vector<Phase>(3));
  MonomialAlgebraSpec::Correction c{1, 0, {0, 0, -1}};  // v u = w^{-1} u v
  auto spec = MonomialAlgebraSpec::make({0, 0, 0}, theta, {c}, 1);
  auto z3 = FgAbelianGroup::from_orders({}, 3);
  auto z2 = FgAbelianGroup::from_orders({}, 2);
  return HeisenbergModel{spec, Grading(spec, z3, IntMatrix::identity(3)),
                         Grading(spec, z2, IntMatrix{{1, 0, 0}, {0, 1, 0}})};
}

}  // namespace nclift
