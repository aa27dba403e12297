#include "nclift/lifting.hpp"

#include <sstream>

namespace nclift {

Embedding Embedding::plain(IntMatrix m) {
  Embedding e;
  e.matrix = std::move(m);
  e.quad.assign(e.matrix.cols(), std::vector<Phase>(e.matrix.cols()));
  return e;
}

Phase Embedding::xi(const IntVec& a) const {
  Phase p;
  for (size_t i = 0; i < quad.size(); ++i)
    for (size_t j = i; j < quad.size(); ++j) {
      if (quad[i][j].is_zero()) continue;
      p += mul_checked(a[i], a[j]) * quad[i][j];
    }
  return p;
}

std::pair<Phase, IntVec> Embedding::apply_exponent(const IntVec& a) const {
  return {xi(a), matrix * a};
}

Element Embedding::apply(const Element& x, const MonomialAlgebraSpec::Ptr& target) const {
  Element out(target);
  for (const auto& [exp, c] : x.terms()) {
    auto [ph, img] = apply_exponent(exp);
    CycScalar coeff = c;
    if (!ph.is_zero())
      coeff = coeff * CycScalar::from_phase(ph, lcm_ll(target->conductor(), ph.den()));
    out = out + Element::monomial(target, coeff, img);
  }
  return out;
}

TwistCochain TwistCochain::trivial_for(const FgAbelianGroup::Ptr& zstar, size_t ahat_gens,
                                       Int table_bound) {
  TwistCochain t;
  if (zstar->is_finite() && zstar->order() <= table_bound) {
    t.kind = Kind::table;
    t.table_group = GroupTable::build(zstar, table_bound);
    size_t m = t.table_group->size();
    t.table.assign(m, std::vector<MonomialUnit>(m, MonomialUnit{Phase(), IntVec(ahat_gens, 0)}));
  } else {
    t.kind = Kind::bilinear;
    t.phase_form.assign(zstar->rank(), std::vector<Phase>(zstar->rank()));
    t.exp_form.assign(zstar->rank(),
                      std::vector<IntVec>(zstar->rank(), IntVec(ahat_gens, 0)));
  }
  return t;
}

MonomialUnit TwistCochain::value(const GroupElement& a, const GroupElement& b,
                                 size_t ahat_gens) const {
  if (kind == Kind::table)
    return table[table_group->index_of(a)][table_group->index_of(b)];
  MonomialUnit u{Phase(), IntVec(ahat_gens, 0)};
  for (size_t i = 0; i < phase_form.size(); ++i)
    for (size_t j = 0; j < phase_form.size(); ++j) {
      Int f = mul_checked(a.coords()[i], b.coords()[j]);
      if (f == 0) continue;
      u.phase += f * phase_form[i][j];
      for (size_t t = 0; t < ahat_gens; ++t)
        u.exp[t] = add_checked(u.exp[t], mul_checked(f, exp_form[i][j][t]));
    }
  return u;
}

namespace {

MonomialUnit unit_sum(const MonomialUnit& a, const MonomialUnit& b, int sign_b) {
  MonomialUnit out = a;
  out.phase = sign_b > 0 ? a.phase + b.phase : a.phase - b.phase;
  for (size_t i = 0; i < out.exp.size(); ++i)
    out.exp[i] = add_checked(a.exp[i], sign_b > 0 ? b.exp[i] : -b.exp[i]);
  return out;
}

}  // namespace

TwistCochain TwistCochain::plus(const TwistCochain& o) const {
  if (kind != o.kind) throw input_error("twist cochain kind mismatch");
  TwistCochain out = *this;
  if (kind == Kind::table) {
    for (size_t i = 0; i < table.size(); ++i)
      for (size_t j = 0; j < table.size(); ++j)
        out.table[i][j] = unit_sum(table[i][j], o.table[i][j], +1);
  } else {
    for (size_t i = 0; i < phase_form.size(); ++i)
      for (size_t j = 0; j < phase_form.size(); ++j) {
        out.phase_form[i][j] = phase_form[i][j] + o.phase_form[i][j];
        for (size_t t = 0; t < exp_form[i][j].size(); ++t)
          out.exp_form[i][j][t] = add_checked(exp_form[i][j][t], o.exp_form[i][j][t]);
      }
  }
  return out;
}

TwistCochain TwistCochain::minus(const TwistCochain& o) const {
  if (kind != o.kind) throw input_error("twist cochain kind mismatch");
  TwistCochain out = *this;
  if (kind == Kind::table) {
    for (size_t i = 0; i < table.size(); ++i)
      for (size_t j = 0; j < table.size(); ++j)
        out.table[i][j] = unit_sum(table[i][j], o.table[i][j], -1);
  } else {
    for (size_t i = 0; i < phase_form.size(); ++i)
      for (size_t j = 0; j < phase_form.size(); ++j) {
        out.phase_form[i][j] = phase_form[i][j] - o.phase_form[i][j];
        for (size_t t = 0; t < exp_form[i][j].size(); ++t)
          out.exp_form[i][j][t] = add_checked(exp_form[i][j][t], -o.exp_form[i][j][t]);
      }
  }
  return out;
}

bool TwistCochain::is_trivial() const {
  if (kind == Kind::table) {
    for (const auto& row : table)
      for (const auto& u : row) {
        if (!u.phase.is_zero()) return false;
        for (Int v : u.exp)
          if (v != 0) return false;
      }
    return true;
  }
  for (size_t i = 0; i < phase_form.size(); ++i)
    for (size_t j = 0; j < phase_form.size(); ++j) {
      if (!phase_form[i][j].is_zero()) return false;
      for (Int v : exp_form[i][j])
        if (v != 0) return false;
    }
  return true;
}

Grading GStructure::zstar_grading() const {
  return Grading(ahat, problem.ext.zstar, problem.ext.proj.matrix() * ghat_grading.phi);
}

GroupElement GStructure::zstar_degree(const IntVec& exp) const {
  return problem.ext.proj.apply(ghat_grading.degree_of(exp));
}

Element GStructure::multiply(const Element& x, const Element& y) const {
  Element out(ahat);
  for (const auto& [ea, ca] : x.terms())
    for (const auto& [eb, cb] : y.terms()) {
      MonomialUnit tw = twist.value(zstar_degree(ea), zstar_degree(eb), ahat->gens());
      Element term = Element::monomial(ahat, ca, ea) * Element::monomial(ahat, cb, eb);
      out = out + unit_to_element(ahat, tw) * term;
    }
  return out;
}

std::optional<IntVec> GStructure::component_unit(const GroupElement& chi) const {
  return zstar_grading().exponent_in_degree(chi);
}

bool restriction_check(const GStructure& s) {
  const MonomialAlgebraSpec::Ptr& a = s.problem.base_alg;
  size_t na = a->gens();
  // grading compatibility: phi_Ahat(iota(e)) = inc(phi_A(e))
  for (size_t j = 0; j < na; ++j) {
    IntVec e(na, 0);
    e[j] = 1;
    GroupElement lhs = s.ghat_grading.degree_of(s.embedding.matrix * e);
    GroupElement rhs = s.problem.ext.inc.apply(s.problem.base_grading.degree_of(e));
    if (!(lhs == rhs)) return false;
  }
  // injectivity of the exponent embedding modulo torsion
  {
    IntMatrix sys = s.embedding.matrix.hstack(relation_lattice(*s.ahat->exponent_group()));
    IntMatrix rel = relation_lattice(*a->exponent_group());
    for (const IntVec& k : int_kernel(sys)) {
      IntVec x(na);
      std::copy(k.begin(), k.begin() + na, x.begin());
      bool zero = std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; });
      if (!zero && !lattice_contains(rel.cols() ? rel : IntMatrix(na, 0), x)) return false;
    }
  }
  // structure constants on generator pairs through the twisted product
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j) {
      IntVec ei(na, 0), ej(na, 0);
      ei[i] = 1;
      ej[j] = 1;
      Element ui = Element::monomial(a, Phase(), ei);
      Element uj = Element::monomial(a, Phase(), ej);
      Element lhs = s.embedding.apply(ui * uj, s.ahat);
      Element rhs = s.multiply(s.embedding.apply(ui, s.ahat), s.embedding.apply(uj, s.ahat));
      if (!(lhs == rhs)) return false;
    }
  // surjectivity onto the G*-part: exponents of Z*-degree zero lie in the
  // embedded lattice (plus Ahat torsion relations)
  {
    size_t nh = s.ahat->gens();
    Grading zg = s.zstar_grading();
    IntMatrix zphi = zg.phi;
    IntMatrix sys = zphi.hstack(relation_lattice(*s.problem.ext.zstar));
    std::vector<IntVec> kernel;
    for (const IntVec& k : int_kernel(sys)) {
      IntVec x(nh);
      std::copy(k.begin(), k.begin() + nh, x.begin());
      kernel.push_back(x);
    }
    IntMatrix image = s.embedding.matrix.hstack(relation_lattice(*s.ahat->exponent_group()));
    for (const IntVec& k : kernel)
      if (!lattice_contains(image, k)) return false;
  }
  return true;
}

void validate_structure(const GStructure& s) {
  if (s.ghat_grading.spec != s.ahat) throw input_error("structure grading algebra mismatch");
  if (s.ghat_grading.lambda != s.problem.ext.ghatstar)
    throw input_error("structure grading group is not Ghat*");
  if (s.embedding.matrix.rows() != s.ahat->gens() ||
      s.embedding.matrix.cols() != s.problem.base_alg->gens())
    throw input_error("embedding shape mismatch");
  // the Z*-level grading must be a genuine algebra grading
  Grading zg = s.zstar_grading();
  if (!zg.kills_corrections())
    throw input_error("Z* grading is not multiplicative on the corrections");
  // twist normalization at the zero component
  size_t nh = s.ahat->gens();
  GroupElement z0 = s.problem.ext.zstar->zero();
  for (const GroupElement& chi :
       {z0, s.problem.ext.zstar->rank() ? s.problem.ext.zstar->generators()[0] : z0}) {
    MonomialUnit u1 = s.twist.value(z0, chi, nh);
    MonomialUnit u2 = s.twist.value(chi, z0, nh);
    for (const MonomialUnit* u : {&u1, &u2}) {
      if (!u->phase.is_zero()) throw input_error("twist is not normalized");
      for (Int v : u->exp)
        if (v != 0) throw input_error("twist is not normalized");
    }
  }
  // twisted associativity on generating monomials
  std::vector<IntVec> probes;
  for (size_t j = 0; j < nh; ++j) {
    IntVec e(nh, 0);
    e[j] = 1;
    probes.push_back(e);
    e[j] = -1;
    probes.push_back(s.ahat->reduce_exponent(std::move(e)));
  }
  for (const IntVec& a : probes)
    for (const IntVec& b : probes)
      for (const IntVec& c : probes) {
        Element x = Element::monomial(s.ahat, Phase(), a);
        Element y = Element::monomial(s.ahat, Phase(), b);
        Element z = Element::monomial(s.ahat, Phase(), c);
        if (!(s.multiply(s.multiply(x, y), z) == s.multiply(x, s.multiply(y, z)))) {
          std::ostringstream os;
          os << "twisted product is not associative at a generator triple";
          throw input_error(os.str());
        }
      }
}

ToyStructure toy_structure(const MonomialAlgebraSpec::Ptr& b, const ExtensionSeq& ext) {
  size_t nb = b->gens();
  auto build_group_algebra = [&](const FgAbelianGroup::Ptr& grp) {
    IntVec orders = b->generator_orders();
    for (Int o : grp->orders()) orders.push_back(o);
    size_t n = nb + grp->rank();
    std::vector<std::vector<Phase>> theta(n, std::vector<Phase>(n));
    for (size_t i = 0; i < nb; ++i)
      for (size_t j = 0; j < nb; ++j) theta[i][j] = b->theta()[i][j];
    std::vector<MonomialAlgebraSpec::Correction> corr;
    for (const auto& c : b->corrections()) {
      IntVec v(n, 0);
      std::copy(c.vector.begin(), c.vector.end(), v.begin());
      corr.push_back({c.k, c.l, v});
    }
    Int cond = b->conductor();
    for (Int o : grp->orders())
      if (o != 0) cond = lcm_ll(cond, o);
    return MonomialAlgebraSpec::make(orders, theta, corr, cond);
  };

  auto ahat = build_group_algebra(ext.ghatstar);
  auto abase = build_group_algebra(ext.gstar);

  size_t rg = ext.gstar->rank(), rh = ext.ghatstar->rank();
  IntMatrix phi_hat(rh, nb + rh);
  for (size_t i = 0; i < rh; ++i) phi_hat.at(i, nb + i) = 1;
  IntMatrix phi_base(rg, nb + rg);
  for (size_t i = 0; i < rg; ++i) phi_base.at(i, nb + i) = 1;

  LiftProblem problem{abase, Grading(abase, ext.gstar, phi_base), ext};

  IntMatrix emb(nb + rh, nb + rg);
  for (size_t i = 0; i < nb; ++i) emb.at(i, i) = 1;
  for (size_t i = 0; i < rh; ++i)
    for (size_t j = 0; j < rg; ++j) emb.at(nb + i, nb + j) = ext.inc.matrix().at(i, j);

  GStructure s{problem, ahat, Grading(ahat, ext.ghatstar, phi_hat), Embedding::plain(emb),
               TwistCochain::trivial_for(ext.zstar, nb + rh)};
  validate_structure(s);
  if (!restriction_check(s)) throw input_error("toy structure failed its restriction check");
  return ToyStructure{problem, s};
}

ToyStructure heisenberg_structure() {
  HeisenbergModel h = heisenberg();
  // duals: G* = Z (w-degree), Ghat* = Z^3, Z* = Z^2
  auto gstar = FgAbelianGroup::from_orders({}, 1);
  auto zstar = FgAbelianGroup::from_orders({}, 2);
  GroupHom inc(gstar, h.grading_z3.lambda, IntMatrix{{0}, {0}, {1}});
  GroupHom proj(h.grading_z3.lambda, zstar, IntMatrix{{1, 0, 0}, {0, 1, 0}});
  ExtensionSeq ext(gstar, h.grading_z3.lambda, zstar, inc, proj);

  std::vector<std::vector<Phase>> th1(1, std::vector<Phase>(1));
  auto laurent = MonomialAlgebraSpec::make({0}, th1, {}, 1);
  LiftProblem problem{laurent, Grading(laurent, gstar, IntMatrix{{1}}), ext};

  GStructure s{problem, h.spec, h.grading_z3, Embedding::plain(IntMatrix{{0}, {0}, {1}}),
               TwistCochain::trivial_for(zstar, 3)};
  validate_structure(s);
  if (!restriction_check(s))
    throw input_error("heisenberg structure failed its restriction check");
  return ToyStructure{problem, s};
}

ToyStructure qtorus_lift_structure(const std::vector<std::vector<Phase>>& theta,
                                   const IntMatrix& m,
                                   const std::vector<std::vector<Phase>>& theta_prime) {
  size_t n = m.rows();
  LatticeExtension lext = extension_from_lattice(m);
  AlgebraWithGrading base = qtorus(theta, n);
  AlgebraWithGrading cover = qtorus(theta_prime, n);
  // regrade the cover by the extension's Ghat* copy of Z^n
  Grading cover_grading(cover.spec, lext.seq.ghatstar, IntMatrix::identity(n));
  Grading base_grading(base.spec, lext.seq.gstar, IntMatrix::identity(n));

  LiftProblem problem{base.spec, base_grading, lext.seq};

  // embedding along M^T with the quadratic phase that aligns normal orders
  IntMatrix mt = m.transpose();
  Embedding emb;
  emb.matrix = mt;
  emb.quad.assign(n, std::vector<Phase>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      IntVec ei = mt.column(i), ej = mt.column(j);
      Phase cover_phase = cover.spec->comm_phase(ei, ej);
      IntVec bi(n, 0), bj(n, 0);
      bi[i] = 1;
      bj[j] = 1;
      Phase base_phase = base.spec->comm_phase(bi, bj);
      Phase diff = cover_phase - base_phase;
      if (i == j) {
        // halve the diagonal of the symmetric defect
        emb.quad[i][j] = Phase(diff.value().num(), 2 * diff.value().den());
      } else {
        emb.quad[i][j] = diff;
      }
    }
  GStructure s{problem, cover.spec, cover_grading, emb,
               TwistCochain::trivial_for(lext.seq.zstar, n)};
  validate_structure(s);
  if (!restriction_check(s))
    throw input_error("quantum torus covering failed its restriction check");
  return ToyStructure{problem, s};
}

namespace {

// G-fixed (optionally) central monomial exponents of the embedded base, as a
// sublattice of E_Ahat given by columns.
IntMatrix central_exponents_of_base(const GStructure& s, bool g_fixed) {
  const auto& a = s.problem.base_alg;
  size_t na = a->gens();
  IntMatrix central = a->central_exponent_kernel();
  std::vector<IntVec> cols;
  for (size_t j = 0; j < central.cols(); ++j) {
    IntVec z = central.column(j);
    if (g_fixed && !s.problem.base_grading.degree_of(z).is_zero()) continue;
    cols.push_back(z);
  }
  if (g_fixed) {
    // intersect the central lattice with the degree-zero lattice exactly
    IntMatrix phi = s.problem.base_grading.phi;
    IntMatrix sysphi = phi.hstack(relation_lattice(*s.problem.base_grading.lambda));
    std::vector<IntVec> deg0;
    for (const IntVec& k : int_kernel(sysphi)) {
      IntVec x(na);
      std::copy(k.begin(), k.begin() + na, x.begin());
      deg0.push_back(x);
    }
    // wanted: central ∩ deg0; solve membership pairwise via a joint kernel
    IntMatrix cmat = central;
    IntMatrix dmat = IntMatrix::from_columns(na, deg0);
    // {x : x = C u = D v}: kernel of [C | -D]
    IntMatrix joint = cmat.hstack([&] {
      IntMatrix neg = dmat;
      for (size_t i = 0; i < neg.rows(); ++i)
        for (size_t j = 0; j < neg.cols(); ++j) neg.at(i, j) = -neg.at(i, j);
      return neg;
    }());
    cols.clear();
    for (const IntVec& k : int_kernel(joint)) {
      IntVec u(cmat.cols());
      std::copy(k.begin(), k.begin() + cmat.cols(), u.begin());
      IntVec x = cmat * u;
      bool zero = std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; });
      if (!zero) cols.push_back(x);
    }
    // keep torsion directions of the central lattice that are degree zero
    for (size_t j = 0; j < central.cols(); ++j) {
      IntVec z = central.column(j);
      if (s.problem.base_grading.degree_of(z).is_zero()) cols.push_back(z);
    }
  }
  // map into E_Ahat
  std::vector<IntVec> mapped;
  for (const IntVec& z : cols) mapped.push_back(s.embedding.matrix * z);
  return IntMatrix::from_columns(s.ahat->gens(), mapped);
}

UnitModule units_impl(const GStructure& s, bool g_fixed) {
  const auto& zstar = s.problem.ext.zstar;
  size_t nh = s.ahat->gens();
  IntMatrix lattice = central_exponents_of_base(s, g_fixed);

  // subgroup structure of the exponent part inside E_Ahat
  IntMatrix ahat_rel = relation_lattice(*s.ahat->exponent_group());
  QuotientStructure q = quotient_structure(lattice.cols() ? lattice.hstack(ahat_rel) : ahat_rel,
                                           ahat_rel);
  std::vector<ModuleSummand> summands(1);
  summands[0].divisible = true;
  ModuleSummand expo;
  std::vector<IntVec> basis_cols;
  for (size_t i = 0; i < q.factors.size(); ++i) {
    expo.orders.push_back(q.factors[i]);
    basis_cols.push_back(q.generators[i]);
  }
  IntMatrix basis = IntMatrix::from_columns(nh, basis_cols);
  bool has_expo = !expo.orders.empty();
  if (has_expo) summands.push_back(expo);

  // Frohlich action per Z* generator, through the designated component units
  Grading zg = s.zstar_grading();
  std::vector<std::vector<IntMatrix>> mats(summands.size());
  mats[0].assign(zstar->rank(), IntMatrix{{1}});
  if (has_expo) {
    for (size_t g = 0; g < zstar->rank(); ++g) {
      MonomialAut d = frohlich(zg, zstar->generators()[g]);
      IntMatrix act(expo.dim(), expo.dim());
      for (size_t j = 0; j < expo.dim(); ++j) {
        auto [ph, img] = d.apply_monomial(basis.column(j));
        if (!ph.is_zero())
          throw unsupported_error(
              "Frohlich action mixes phases into the exponent summand (nondecomposable)");
        // express img in the basis modulo the Ahat relations
        IntMatrix sys = basis.hstack(ahat_rel);
        IntSolve sol = solve_int(sys, img);
        if (!sol.solvable)
          throw unsupported_error("Frohlich action leaves the central unit lattice");
        for (size_t i = 0; i < expo.dim(); ++i) act.at(i, j) = sol.particular[i];
      }
      mats[1].push_back(act);
    }
  }
  UnitModule out;
  out.module = CoeffModule::make(zstar, summands, mats);
  out.exponent_basis = basis;
  std::ostringstream os;
  os << "U(Z(A)" << (g_fixed ? "^G" : "") << ") = " << out.module->str();
  out.description = os.str();
  return out;
}

}  // namespace

UnitModule fixed_central_units(const GStructure& s) { return units_impl(s, true); }

UnitModule central_units(const GStructure& s) { return units_impl(s, false); }

GStructure twist_structure(const GStructure& s, const TwistCochain& omega) {
  GStructure out = s;
  out.twist = s.twist.plus(omega);
  // values must be G-fixed central units of the embedded base
  IntMatrix lattice = central_exponents_of_base(s, true);
  IntMatrix ahat_rel = relation_lattice(*s.ahat->exponent_group());
  IntMatrix membership = lattice.cols() ? lattice.hstack(ahat_rel) : ahat_rel;
  auto check_unit = [&](const MonomialUnit& u) {
    bool zero = std::all_of(u.exp.begin(), u.exp.end(), [](Int v) { return v == 0; });
    if (zero) return;
    if (!lattice_contains(membership, u.exp))
      throw input_error("twist value is not a G-fixed central unit of the base");
  };
  if (omega.kind == TwistCochain::Kind::table) {
    for (const auto& row : omega.table)
      for (const auto& u : row) check_unit(u);
  } else {
    for (const auto& row : omega.exp_form)
      for (const auto& e : row) check_unit(MonomialUnit{Phase(), e});
  }
  validate_structure(out);  // includes the associativity (cocycle) check
  return out;
}

bool freeness_check(const GStructure& s) {
  // (i) strong grading on the Ghat* generator window
  if (!strong_grading_check(s.ghat_grading, s.problem.ext.ghatstar->generators())) return false;
  // (ii) component factorization at the Z* level, with the designated units
  Grading zg = s.zstar_grading();
  size_t nh = s.ahat->gens();
  IntMatrix sysphi = zg.phi.hstack(relation_lattice(*s.problem.ext.zstar));
  std::vector<IntVec> deg0;
  for (const IntVec& k : int_kernel(sysphi)) {
    IntVec x(nh);
    std::copy(k.begin(), k.begin() + nh, x.begin());
    deg0.push_back(x);
  }
  IntMatrix k0 = IntMatrix::from_columns(nh, deg0);
  IntMatrix ahat_rel = relation_lattice(*s.ahat->exponent_group());
  std::vector<GroupElement> gens = s.problem.ext.zstar->generators();
  std::vector<GroupElement> probe = gens;
  for (const auto& g : gens) probe.push_back(-g);
  if (probe.empty()) probe.push_back(s.problem.ext.zstar->zero());
  for (const GroupElement& chi : probe)
    for (const GroupElement& chi2 : probe) {
      auto a0 = s.component_unit(chi);
      auto b0 = s.component_unit(chi2);
      if (!a0 || !b0) return false;
      // images {a0 + b + corr(a0, b)} over b in the chi2 coset cover the
      // chi+chi2 coset iff (I + C_{a0}) maps the degree-zero lattice onto it
      std::vector<IntVec> mapped;
      for (const IntVec& k : deg0) {
        IntVec img(nh);
        IntVec corr = s.ahat->comm_correction(*a0, k);
        for (size_t j = 0; j < nh; ++j) img[j] = k[j] + corr[j];
        mapped.push_back(img);
      }
      IntMatrix mk = IntMatrix::from_columns(nh, mapped).hstack(ahat_rel);
      IntMatrix full = k0.hstack(ahat_rel);
      for (size_t j = 0; j < k0.cols(); ++j)
        if (!lattice_contains(mk, k0.column(j))) return false;
      for (size_t j = 0; j < mk.cols(); ++j)
        if (!lattice_contains(full, mk.column(j))) return false;
    }
  return true;
}

PicardReport picard_data(const GStructure& s) {
  PicardReport out;
  out.trivial = true;
  Grading zg = s.zstar_grading();
  UnitModule units = fixed_central_units(s);
  std::vector<GroupElement> gens = s.problem.ext.zstar->generators();
  if (gens.empty()) gens.push_back(s.problem.ext.zstar->zero());
  for (const GroupElement& chi : gens) {
    PicardRecord rec{chi, false, false};
    auto unit = s.component_unit(chi);
    rec.cleft = unit.has_value();
    if (!rec.cleft)
      throw unsupported_error("non-cleft component: Picard data needs an invertible monomial");
    if (!frohlich_is_choice_independent(zg, chi))
      throw unsupported_error("Frohlich map depends on the component unit choice");
    MonomialAut d = frohlich(zg, chi);
    rec.frohlich_trivial = true;
    for (size_t j = 0; j < units.exponent_basis.cols(); ++j) {
      auto [ph, img] = d.apply_monomial(units.exponent_basis.column(j));
      if (!ph.is_zero() ||
          img != s.ahat->reduce_exponent(units.exponent_basis.column(j)))
        rec.frohlich_trivial = false;
    }
    out.trivial &= rec.cleft && rec.frohlich_trivial;
    out.records.push_back(rec);
  }
  // additivity spot check on generator pairs
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) {
      MonomialAut lhs = frohlich(zg, gens[i] + gens[j]);
      MonomialAut rhs = frohlich(zg, gens[i]).compose(frohlich(zg, gens[j]));
      for (size_t t = 0; t < units.exponent_basis.cols(); ++t) {
        IntVec z = units.exponent_basis.column(t);
        auto [p1, x1] = lhs.apply_monomial(z);
        auto [p2, x2] = rhs.apply_monomial(z);
        if (!(p1 == p2) || x1 != x2)
          throw unsupported_error("Frohlich additivity fails on central units");
      }
    }
  return out;
}

}  // namespace nclift
