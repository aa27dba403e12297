#include <sstream>

#include "nclift/lifting.hpp"

namespace nclift {

namespace {

// MonomialUnit -> value of the unit coefficient module (phase summand plus
// exponent coordinates in the module basis).
ModuleValue unit_to_module_value(const GStructure& s, const UnitModule& um,
                                 const MonomialUnit& u) {
  ModuleValue v = um.module->zero_value();
  v[0].ph = u.phase;
  bool zero = std::all_of(u.exp.begin(), u.exp.end(), [](Int x) { return x == 0; });
  if (!zero) {
    if (um.module->summand_count() < 2)
      throw input_error("unit exponent outside the central unit module");
    IntMatrix sys =
        um.exponent_basis.hstack(relation_lattice(*s.ahat->exponent_group()));
    IntSolve sol = solve_int(sys, u.exp);
    if (!sol.solvable) throw input_error("unit exponent outside the central unit module");
    v[1].z.assign(sol.particular.begin(),
                  sol.particular.begin() + um.exponent_basis.cols());
    v = um.module->reduce(std::move(v));
  }
  return v;
}

MonomialUnit module_value_to_unit(const GStructure& s, const UnitModule& um,
                                  const ModuleValue& v) {
  MonomialUnit u{v[0].ph, IntVec(s.ahat->gens(), 0)};
  if (um.module->summand_count() > 1) {
    for (size_t j = 0; j < um.exponent_basis.cols(); ++j)
      for (size_t i = 0; i < s.ahat->gens(); ++i)
        u.exp[i] = add_checked(u.exp[i], mul_checked(v[1].z[j], um.exponent_basis.at(i, j)));
    u.exp = s.ahat->reduce_exponent(std::move(u.exp));
  }
  return u;
}

TwistCochain rep_to_twist_table(const GStructure& s, const UnitModule& um, const Cochain& rep) {
  TwistCochain t = TwistCochain::trivial_for(s.problem.ext.zstar, s.ahat->gens());
  if (t.kind != TwistCochain::Kind::table)
    throw unsupported_error("table twist requires a finite Z*");
  const GroupTable& gt = *rep.group_table();
  for (size_t i = 0; i < gt.size(); ++i)
    for (size_t j = 0; j < gt.size(); ++j) {
      ModuleValue v = rep.value({i, j});
      size_t ti = t.table_group->index_of(gt.elems[i]);
      size_t tj = t.table_group->index_of(gt.elems[j]);
      t.table[ti][tj] = module_value_to_unit(s, um, v);
    }
  return t;
}

TwistCochain rep_to_twist_bilinear(const GStructure& s, const UnitModule& um,
                                   const BilinearRep& rep) {
  TwistCochain t;
  t.kind = TwistCochain::Kind::bilinear;
  size_t r = s.problem.ext.zstar->rank();
  t.phase_form.assign(r, std::vector<Phase>(r));
  t.exp_form.assign(r, std::vector<IntVec>(r, IntVec(s.ahat->gens(), 0)));
  if (rep.summand == 0) {
    // divisible phase class; families get the sample phase 1/2
    t.phase_form[rep.ai][rep.aj] = rep.family ? Phase(1, 2) : rep.pval;
  } else {
    IntVec col = um.exponent_basis.column(rep.coord);
    for (auto& x : col) x = mul_checked(x, rep.zval == 0 ? 1 : rep.zval);
    t.exp_form[rep.ai][rep.aj] = col;
  }
  return t;
}

}  // namespace

ClassificationReport classify(const GStructure& s) {
  ClassificationReport out;
  out.coefficients = fixed_central_units(s);
  const auto& zstar = s.problem.ext.zstar;
  bool trivial_action = out.coefficients.module->action_is_trivial();
  if (zstar->free_rank() == zstar->rank() && trivial_action) {
    out.h2 = h2_structural(zstar, out.coefficients.module);
    for (const BilinearRep& rep : out.h2.bilinear_reps)
      out.representative_twists.push_back(rep_to_twist_bilinear(s, out.coefficients, rep));
    return out;
  }
  if (zstar->is_finite()) {
    auto gt = GroupTable::build(zstar);
    out.h2 = cohomology_group(gt, out.coefficients.module, 2);
    for (const Cochain& rep : out.h2.reps)
      out.representative_twists.push_back(rep_to_twist_table(s, out.coefficients, rep));
    return out;
  }
  throw unsupported_error(
      "classification needs a finite Z*, or a free Z* with trivial Frohlich action");
}

EquivalenceResult equivalence_test(const GStructure& s1, const GStructure& s2) {
  if (!s1.ahat->same_structure(*s2.ahat) ||
      !(s1.embedding.matrix == s2.embedding.matrix))
    throw input_error("equivalence test requires identical underlying components");
  EquivalenceResult out;
  TwistCochain ratio = s2.twist.minus(s1.twist);
  UnitModule um = fixed_central_units(s1);
  const auto& zstar = s1.problem.ext.zstar;

  if (ratio.kind == TwistCochain::Kind::table) {
    auto gt = ratio.table_group;
    Cochain omega(gt, um.module, 2);
    for (size_t i = 0; i < gt->size(); ++i)
      for (size_t j = 0; j < gt->size(); ++j)
        omega.set_value({i, j}, unit_to_module_value(s1, um, ratio.table[i][j]));
    CoboundaryResult r = is_coboundary(omega);
    out.equivalent = r.is_coboundary;
    if (r.is_coboundary) {
      out.primitive = r.primitive;
      out.detail = "twist difference is the coboundary of a 1-cochain";
    } else {
      out.detail = "inequivalent: " + r.certificate;
    }
    return out;
  }

  // bilinear path over a free Z* with trivial action: the class is the
  // antisymmetrization of the bilinear form
  if (!um.module->action_is_trivial())
    throw unsupported_error("bilinear equivalence needs a trivial Frohlich action");
  bool zero = true;
  std::ostringstream detail;
  for (size_t i = 0; i < zstar->rank() && zero; ++i)
    for (size_t j = i + 1; j < zstar->rank() && zero; ++j) {
      Phase p = ratio.phase_form[i][j] - ratio.phase_form[j][i];
      IntVec e(s1.ahat->gens(), 0);
      for (size_t t = 0; t < e.size(); ++t)
        e[t] = ratio.exp_form[i][j][t] - ratio.exp_form[j][i][t];
      bool e_zero = true;
      {
        IntMatrix rel = relation_lattice(*s1.ahat->exponent_group());
        IntVec red = s1.ahat->reduce_exponent(IntVec(e));
        e_zero = std::all_of(red.begin(), red.end(), [](Int v) { return v == 0; });
        (void)rel;
      }
      if (!p.is_zero() || !e_zero) {
        zero = false;
        detail << "class generator at (" << i << "," << j << "): phase " << p.str();
      }
    }
  out.equivalent = zero;
  out.detail = zero ? "bilinear difference is symmetric (quadratic primitive)" : detail.str();
  return out;
}

GaugeReport gauge_group(const GStructure& s) {
  GaugeReport out;
  out.coefficients = central_units(s);
  const auto& zstar = s.problem.ext.zstar;
  if (out.coefficients.module->action_is_trivial()) {
    out.z1 = crossed_homs_structural(zstar, out.coefficients.module);
    out.note = "Hom(Z*, U(Z(A)))";
    return out;
  }
  if (zstar->is_finite()) {
    auto gt = GroupTable::build(zstar);
    out.z1 = crossed_homs(gt, out.coefficients.module).z1;
    out.note = "crossed homomorphisms with the Frohlich twist";
    return out;
  }
  throw unsupported_error("gauge group needs a finite Z* or a trivial Frohlich action");
}

Element gauge_value(const GStructure& s, const GaugeElement& c, const GroupElement& chi) {
  const auto& zstar = s.problem.ext.zstar;
  if (c.gen_values.size() != zstar->rank())
    throw input_error("one gauge value per Z* generator required");
  Grading zg = s.zstar_grading();
  Element out = Element::unit(s.ahat);
  GroupElement acc = zstar->zero();
  for (size_t i = 0; i < zstar->rank(); ++i) {
    Int e = chi.coords()[i];
    if (e == 0) continue;
    Element vg = unit_to_element(s.ahat, c.gen_values[i]);
    GroupElement gen = zstar->generators()[i];
    Element step = vg;
    GroupElement dir = gen;
    if (e < 0) {
      // c(-gen) = Delta_{-gen}(c(gen)^*)
      step = frohlich(zg, -gen).apply(vg.star());
      dir = -gen;
    }
    for (Int k = 0; k < std::abs(e); ++k) {
      // c(acc + dir) = c(acc) * Delta_acc(c(dir))
      out = out * frohlich(zg, acc).apply(step);
      acc = acc + dir;
    }
  }
  return out;
}

Element apply_gauge(const GStructure& s, const GaugeElement& c, const Element& x) {
  Element out(s.ahat);
  for (const auto& [exp, coeff] : x.terms()) {
    GroupElement chi = s.zstar_degree(exp);
    out = out + gauge_value(s, c, chi) * Element::monomial(s.ahat, coeff, exp);
  }
  return out;
}

bool gauge_is_automorphism(const GStructure& s, const GaugeElement& c) {
  // gauge values must be central units of the embedded base
  UnitModule um = central_units(s);
  for (const auto& u : c.gen_values) {
    try {
      (void)unit_to_module_value(s, um, u);
    } catch (const input_error&) {
      return false;
    }
  }
  // torsion consistency of the crossed extension
  const auto& zstar = s.problem.ext.zstar;
  for (size_t i = 0; i < zstar->rank(); ++i) {
    Int d = zstar->orders()[i];
    if (d == 0) continue;
    Element full = gauge_value(s, c, (d - 1) * zstar->generators()[i]);
    Grading zg = s.zstar_grading();
    Element closed =
        full * frohlich(zg, (d - 1) * zstar->generators()[i])
                   .apply(unit_to_element(s.ahat, c.gen_values[i]));
    if (!(closed == Element::unit(s.ahat))) return false;
  }
  // multiplicativity, star and grading preservation on generators
  size_t nh = s.ahat->gens();
  std::vector<Element> gens;
  for (size_t j = 0; j < nh; ++j) {
    IntVec e(nh, 0);
    e[j] = 1;
    gens.push_back(Element::monomial(s.ahat, Phase(), e));
  }
  for (const Element& x : gens)
    for (const Element& y : gens) {
      Element lhs = apply_gauge(s, c, s.multiply(x, y));
      Element rhs = s.multiply(apply_gauge(s, c, x), apply_gauge(s, c, y));
      if (!(lhs == rhs)) return false;
    }
  for (const Element& x : gens) {
    if (!(apply_gauge(s, c, x.star()) == apply_gauge(s, c, x).star())) return false;
    // grading preserved: the image stays in the same Z* component
    for (const auto& [exp, coeff] : apply_gauge(s, c, x).terms()) {
      (void)coeff;
      if (!(s.zstar_degree(exp) == s.zstar_degree(x.terms().begin()->first))) return false;
    }
  }
  return true;
}

}  // namespace nclift
