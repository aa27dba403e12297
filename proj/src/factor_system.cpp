#include "nclift/factor_system.hpp"

#include <sstream>

namespace nclift {

CleftOmega CleftOmega::trivial(size_t rank, size_t base_gens) {
  CleftOmega o;
  o.kind = Kind::bilinear;
  o.phase_form.assign(rank, std::vector<Phase>(rank));
  o.exp_form.assign(rank, std::vector<IntVec>(rank, IntVec(base_gens, 0)));
  return o;
}

CleftOmega CleftOmega::bilinear(std::vector<std::vector<Phase>> phases,
                                std::vector<std::vector<IntVec>> exps) {
  CleftOmega o;
  o.kind = Kind::bilinear;
  o.phase_form = std::move(phases);
  o.exp_form = std::move(exps);
  return o;
}

CleftOmega CleftOmega::from_table(GroupTable::Ptr gt,
                                  std::vector<std::vector<MonomialUnit>> tab) {
  CleftOmega o;
  o.kind = Kind::table;
  o.table_group = std::move(gt);
  o.table = std::move(tab);
  return o;
}

CleftOmega CleftOmega::generic(
    std::function<MonomialUnit(const GroupElement&, const GroupElement&)> f, size_t base_gens) {
  CleftOmega o;
  o.kind = Kind::generic;
  o.fn = std::move(f);
  o.exp_form.assign(1, std::vector<IntVec>(1, IntVec(base_gens, 0)));
  return o;
}

MonomialUnit CleftOmega::value(const GroupElement& a, const GroupElement& b,
                               size_t base_gens) const {
  switch (kind) {
    case Kind::bilinear: {
      MonomialUnit u{Phase(), IntVec(base_gens, 0)};
      for (size_t i = 0; i < phase_form.size(); ++i)
        for (size_t j = 0; j < phase_form.size(); ++j) {
          Int f = mul_checked(a.coords()[i], b.coords()[j]);
          if (f == 0) continue;
          u.phase += f * phase_form[i][j];
          for (size_t t = 0; t < base_gens; ++t)
            u.exp[t] = add_checked(u.exp[t], mul_checked(f, exp_form[i][j][t]));
        }
      return u;
    }
    case Kind::table:
      return table[table_group->index_of(a)][table_group->index_of(b)];
    case Kind::generic:
      return fn(a, b);
  }
  throw input_error("unreachable omega kind");
}

bool CleftOmega::strictly_lower_bilinear() const {
  if (kind != Kind::bilinear) return false;
  for (size_t i = 0; i < phase_form.size(); ++i)
    for (size_t j = i; j < phase_form.size(); ++j) {
      if (!phase_form[i][j].is_zero()) return false;
      for (Int v : exp_form[i][j])
        if (v != 0) return false;
    }
  return true;
}

MonomialAut CleftFactorSystem::gamma_of(const GroupElement& lam) const {
  MonomialAut out = MonomialAut::identity(base);
  for (size_t i = 0; i < lambda->rank(); ++i) {
    Int e = lam.coords()[i];
    if (e == 0) continue;
    MonomialAut g = e > 0 ? gamma_gens[i] : gamma_gens[i].inverse();
    for (Int k = 0; k < std::abs(e); ++k) out = out.compose(g);
  }
  return out;
}

Element CleftFactorSystem::omega_elem(const GroupElement& a, const GroupElement& b) const {
  return unit_to_element(base, omega.value(a, b, base->gens()));
}

std::vector<std::array<GroupElement, 3>> default_triple_set(const FgAbelianGroup::Ptr& lambda,
                                                            Int bound) {
  std::vector<std::array<GroupElement, 3>> out;
  if (lambda->is_finite() && lambda->order() <= 8) {
    auto all = lambda->enumerate(bound);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) out.push_back({a, b, c});
    return out;
  }
  // generators, their negatives and sums: enough to expose bilinear defects
  std::vector<GroupElement> probe = {lambda->zero()};
  for (const auto& g : lambda->generators()) {
    probe.push_back(g);
    probe.push_back(-g);
    probe.push_back(g + g);
  }
  for (size_t i = 0; i + 1 < lambda->rank(); ++i)
    probe.push_back(lambda->generators()[i] + lambda->generators()[i + 1]);
  for (const auto& a : probe)
    for (const auto& b : probe)
      for (const auto& c : probe) out.push_back({a, b, c});
  return out;
}

CheckReport check_cleft_factor_system(const CleftFactorSystem& fs,
                                      const std::vector<std::array<GroupElement, 3>>& triples) {
  CheckReport rep;
  std::ostringstream w;
  // normalization
  if (!fs.gamma_of(fs.lambda->zero()).is_identity()) {
    rep.pass = false;
    rep.witness = "gamma(0) is not the identity";
    return rep;
  }
  for (const auto& t : triples) {
    const GroupElement &a = t[0], &b = t[1], &c = t[2];
    Element lhs = fs.omega_elem(a, b) * fs.omega_elem(a + b, c);
    Element rhs = fs.gamma_of(a).apply(fs.omega_elem(b, c)) * fs.omega_elem(a, b + c);
    if (!(lhs == rhs)) {
      rep.pass = false;
      w << "cocycle identity fails at (" << a.str() << "," << b.str() << "," << c.str() << ")";
      rep.witness = w.str();
      return rep;
    }
    if (a.is_zero() || b.is_zero()) {
      Element om = fs.omega_elem(a, b);
      if (!(om == Element::unit(fs.base))) {
        rep.pass = false;
        w << "normalization fails at (" << a.str() << "," << b.str() << ")";
        rep.witness = w.str();
        return rep;
      }
    }
  }
  // coaction identity on base generators, over the pairs in the triple set
  for (const auto& t : triples) {
    const GroupElement &a = t[0], &b = t[1];
    MonomialAut gab = fs.gamma_of(a + b);
    MonomialAut gagb = fs.gamma_of(a).compose(fs.gamma_of(b));
    Element om = fs.omega_elem(a, b);
    for (size_t j = 0; j < fs.base->gens(); ++j) {
      IntVec e(fs.base->gens(), 0);
      e[j] = 1;
      Element uj = Element::monomial(fs.base, Phase(), e);
      if (!(om * gab.apply(uj) == gagb.apply(uj) * om)) {
        rep.pass = false;
        w << "coaction identity fails at (" << a.str() << "," << b.str() << ") on generator "
          << j;
        rep.witness = w.str();
        return rep;
      }
    }
  }
  return rep;
}

AlgebraWithGrading build_from_factor_system(const CleftFactorSystem& fs) {
  CheckReport rep = check_cleft_factor_system(fs, default_triple_set(fs.lambda));
  if (!rep.pass) throw input_error("factor system fails its axioms: " + rep.witness);
  if (fs.omega.kind == CleftOmega::Kind::generic)
    throw unsupported_error("building needs bilinear or table transition data");
  if (fs.omega.kind == CleftOmega::Kind::bilinear && !fs.omega.strictly_lower_bilinear())
    throw unsupported_error(
        "building needs a normal-ordered (strictly lower triangular) bilinear omega");
  if (fs.omega.kind == CleftOmega::Kind::table)
    throw unsupported_error("building from table omega is not implemented; use bilinear data");

  size_t m = fs.base->gens();
  size_t r = fs.lambda->rank();
  size_t n = m + r;
  IntVec orders = fs.base->generator_orders();
  for (Int o : fs.lambda->orders()) orders.push_back(o);

  std::vector<std::vector<Phase>> theta(n, std::vector<Phase>(n));
  std::vector<MonomialAlgebraSpec::Correction> corr;
  // base block
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) theta[i][j] = fs.base->theta()[i][j];
  for (const auto& c : fs.base->corrections()) {
    IntVec v(n, 0);
    std::copy(c.vector.begin(), c.vector.end(), v.begin());
    corr.push_back({c.k, c.l, v});
  }
  // grading generator against base generator: u_K u_j = gamma_k(u_j) u_K
  for (size_t k = 0; k < r; ++k) {
    size_t kk = m + k;
    for (size_t j = 0; j < m; ++j) {
      IntVec e(m, 0);
      e[j] = 1;
      auto [ph, img] = fs.gamma_gens[k].apply_monomial(e);
      theta[kk][j] = ph;
      theta[j][kk] = -ph;
      IntVec shift(n, 0);
      bool nonzero = false;
      for (size_t t = 0; t < m; ++t) {
        shift[t] = img[t] - e[t];
        nonzero |= shift[t] != 0;
      }
      if (nonzero) corr.push_back({kk, j, shift});
    }
  }
  // grading block from the antisymmetrized omega
  for (size_t k = 0; k < r; ++k)
    for (size_t l = 0; l < k; ++l) {
      size_t kk = m + k, ll = m + l;
      Phase ph = fs.omega.phase_form[k][l] - fs.omega.phase_form[l][k];
      theta[kk][ll] = ph;
      theta[ll][kk] = -ph;
      IntVec shift(n, 0);
      bool nonzero = false;
      for (size_t t = 0; t < m; ++t) {
        shift[t] = fs.omega.exp_form[k][l][t] - fs.omega.exp_form[l][k][t];
        nonzero |= shift[t] != 0;
      }
      if (nonzero) corr.push_back({kk, ll, shift});
    }
  Int cond = fs.base->conductor();
  for (const auto& row : theta)
    for (const Phase& p : row) cond = lcm_ll(cond, p.den());
  auto spec = MonomialAlgebraSpec::make(orders, theta, corr, cond);
  IntMatrix phi(fs.lambda->rank(), n);
  for (size_t i = 0; i < r; ++i) phi.at(i, m + i) = 1;
  return AlgebraWithGrading{spec, Grading(spec, fs.lambda, phi)};
}

CheckReport check_conjugacy(const std::vector<MonomialUnit>& v_gens, const CleftFactorSystem& fs,
                            const CleftFactorSystem& fs2,
                            const std::vector<std::array<GroupElement, 3>>& triples) {
  CheckReport rep;
  if (v_gens.size() != fs.lambda->rank()) throw input_error("one unit per grading generator");
  auto v_of = [&](const GroupElement& lam) -> Element {
    // v extends along gamma: v(a + b) = v(a) gamma_a(v(b)) with v(gen) given
    Element out = Element::unit(fs.base);
    GroupElement acc = fs.lambda->zero();
    for (size_t i = 0; i < fs.lambda->rank(); ++i) {
      Int e = lam.coords()[i];
      Element vg = unit_to_element(fs.base, v_gens[i]);
      Element step = e >= 0 ? vg : fs.gamma_gens[i].inverse().apply(vg.star());
      GroupElement gen = fs.lambda->generators()[i];
      GroupElement dir = e >= 0 ? gen : -gen;
      for (Int k = 0; k < std::abs(e); ++k) {
        out = out * fs.gamma_of(acc).apply(step);
        acc = acc + dir;
      }
    }
    return out;
  };
  std::ostringstream w;
  for (const auto& t : triples) {
    const GroupElement &a = t[0], &b = t[1];
    Element va = v_of(a), vb = v_of(b), vab = v_of(a + b);
    // Ad[v(a)] gamma_a = gamma'_a on base generators
    for (size_t j = 0; j < fs.base->gens(); ++j) {
      IntVec e(fs.base->gens(), 0);
      e[j] = 1;
      Element uj = Element::monomial(fs.base, Phase(), e);
      if (!(va * fs.gamma_of(a).apply(uj) * va.star() == fs2.gamma_of(a).apply(uj))) {
        rep.pass = false;
        w << "gamma conjugation fails at " << a.str() << " on generator " << j;
        rep.witness = w.str();
        return rep;
      }
    }
    // v(a) gamma_a(v(b)) omega(a,b) = omega'(a,b) v(a+b)
    Element lhs = va * fs.gamma_of(a).apply(vb) * fs.omega_elem(a, b);
    Element rhs = fs2.omega_elem(a, b) * vab;
    if (!(lhs == rhs)) {
      rep.pass = false;
      w << "transition conjugation fails at (" << a.str() << "," << b.str() << ")";
      rep.witness = w.str();
      return rep;
    }
  }
  return rep;
}

ElementMatrix::ElementMatrix(size_t rows, size_t cols, const MonomialAlgebraSpec::Ptr& spec)
    : rows_(rows), cols_(cols), entries_(rows * cols, Element::zero(spec)) {}

ElementMatrix ElementMatrix::mul(const ElementMatrix& o) const {
  if (cols_ != o.rows_) throw input_error("element matrix shape mismatch");
  ElementMatrix out(rows_, o.cols_, entries_.empty() ? o.entries_[0].spec() : entries_[0].spec());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
    }
  return out;
}

ElementMatrix ElementMatrix::star() const {
  ElementMatrix out(cols_, rows_, entries_[0].spec());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).star();
  return out;
}

ElementMatrix ElementMatrix::kron_identity(size_t n) const {
  ElementMatrix out(rows_ * n, cols_ * n, entries_[0].spec());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      for (size_t k = 0; k < n; ++k) out.at(i * n + k, j * n + k) = at(i, j);
  return out;
}

bool ElementMatrix::equal(const ElementMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < entries_.size(); ++i)
    if (!(entries_[i] == o.entries_[i])) return false;
  return true;
}

ElementMatrix ElementMatrix::identity(size_t n, const MonomialAlgebraSpec::Ptr& spec) {
  ElementMatrix out(n, n, spec);
  for (size_t i = 0; i < n; ++i) out.at(i, i) = Element::unit(spec);
  return out;
}

ElementMatrix MatrixFactorSystem::gamma_apply(size_t elem, const Element& b) const {
  size_t d = static_cast<size_t>(dims[elem]);
  ElementMatrix out(d, d, base);
  for (const auto& [exp, c] : b.terms()) {
    ElementMatrix term = gamma_unit[elem];
    for (size_t j = 0; j < base->gens(); ++j) {
      Int e = exp[j];
      if (e == 0) continue;
      const ElementMatrix& mj = gamma_gen[elem][j];
      ElementMatrix factor = e > 0 ? mj : mj.star();
      for (Int k = 0; k < std::abs(e); ++k) term = term.mul(factor);
    }
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) out.at(i, j) = out.at(i, j) + c * term.at(i, j);
  }
  return out;
}

ElementMatrix MatrixFactorSystem::gamma_amplify(size_t elem, const ElementMatrix& y) const {
  size_t d = static_cast<size_t>(dims[elem]);
  ElementMatrix out(y.rows() * d, y.cols() * d, base);
  for (size_t i = 0; i < y.rows(); ++i)
    for (size_t j = 0; j < y.cols(); ++j) {
      ElementMatrix block = gamma_apply(elem, y.at(i, j));
      for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) out.at(a * y.rows() + i, b * y.cols() + j) = block.at(a, b);
    }
  return out;
}

CheckReport check_matrix_factor_system(const MatrixFactorSystem& mfs) {
  CheckReport rep;
  std::ostringstream w;
  size_t m = mfs.lambda->size();
  if (m > 16) throw size_error("matrix factor system bounded at |Lambda| <= 16");
  if (mfs.dims.size() != m || mfs.dims[0] != 1) {
    rep.pass = false;
    rep.witness = "normalization: H_0 must be one-dimensional";
    return rep;
  }
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.witness = msg;
    return rep;
  };
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      size_t ab = mfs.lambda->add[a][b];
      const ElementMatrix& om = mfs.omega[a][b];
      if (om.rows() != static_cast<size_t>(mfs.dims[a] * mfs.dims[b]) ||
          om.cols() != static_cast<size_t>(mfs.dims[ab]))
        throw input_error("omega shape mismatch");
      // ranges identities
      ElementMatrix left = om.star().mul(om);
      if (!left.equal(mfs.gamma_apply(ab, Element::unit(mfs.base)))) {
        w << "ranges identity (initial) fails at (" << a << "," << b << ")";
        return fail(w.str());
      }
      ElementMatrix right = om.mul(om.star());
      if (!right.equal(mfs.gamma_amplify(a, mfs.gamma_apply(b, Element::unit(mfs.base))))) {
        w << "ranges identity (final) fails at (" << a << "," << b << ")";
        return fail(w.str());
      }
      // coaction identity on base generators
      for (size_t j = 0; j < mfs.base->gens(); ++j) {
        IntVec e(mfs.base->gens(), 0);
        e[j] = 1;
        Element uj = Element::monomial(mfs.base, Phase(), e);
        ElementMatrix lhs = om.mul(mfs.gamma_apply(ab, uj));
        ElementMatrix rhs = mfs.gamma_amplify(a, mfs.gamma_apply(b, uj)).mul(om);
        if (!lhs.equal(rhs)) {
          w << "coaction identity fails at (" << a << "," << b << ") on generator " << j;
          return fail(w.str());
        }
      }
    }
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      for (size_t c = 0; c < m; ++c) {
        size_t ab = mfs.lambda->add[a][b];
        size_t bc = mfs.lambda->add[b][c];
        ElementMatrix lhs =
            mfs.omega[a][b].kron_identity(static_cast<size_t>(mfs.dims[c])).mul(mfs.omega[ab][c]);
        ElementMatrix rhs = mfs.gamma_amplify(a, mfs.omega[b][c]).mul(mfs.omega[a][bc]);
        if (!lhs.equal(rhs)) {
          w << "cocycle identity fails at (" << a << "," << b << "," << c << ")";
          return fail(w.str());
        }
      }
  return rep;
}

MonomialAut frohlich(const Grading& g, const GroupElement& chi) {
  auto s = g.exponent_in_degree(chi);
  if (!s)
    throw unsupported_error("component has no invertible monomial (non-cleft component)");
  return conjugation_by_monomial(g.spec, *s);
}

bool frohlich_is_choice_independent(const Grading& g, const GroupElement& chi) {
  auto s = g.exponent_in_degree(chi);
  if (!s) throw unsupported_error("component has no invertible monomial");
  MonomialAut first = conjugation_by_monomial(g.spec, *s);
  // alternative choices differ by kernel exponents of the degree map
  IntMatrix phi_rel = g.phi.hstack(relation_lattice(*g.lambda));
  std::vector<IntVec> kernel;
  for (const IntVec& k : int_kernel(phi_rel)) {
    IntVec x(g.spec->gens());
    std::copy(k.begin(), k.begin() + g.spec->gens(), x.begin());
    kernel.push_back(x);
  }
  IntMatrix central = g.spec->central_exponent_kernel();
  for (const IntVec& k : kernel) {
    IntVec alt(g.spec->gens());
    for (size_t j = 0; j < alt.size(); ++j) alt[j] = (*s)[j] + k[j];
    MonomialAut other = conjugation_by_monomial(g.spec, alt);
    for (size_t j = 0; j < central.cols(); ++j) {
      IntVec z = central.column(j);
      auto [p1, x1] = first.apply_monomial(z);
      auto [p2, x2] = other.apply_monomial(z);
      if (!(p1 == p2) || x1 != x2) return false;
    }
  }
  return true;
}

}  // namespace nclift
