#include "nclift/obstruction.hpp"

#include <sstream>

namespace nclift {

GroupHom dual_hom(const GroupHom& f, const FgAbelianGroup::Ptr& dual_source,
                  const FgAbelianGroup::Ptr& dual_target) {
  // f: A -> B finite; f*: dual(B) -> dual(A), (f* b)_i = dA_i f_{ji} b_j / dB_j
  const auto& da = f.source()->orders();
  const auto& db = f.target()->orders();
  IntMatrix mat(da.size(), db.size());
  for (size_t i = 0; i < da.size(); ++i)
    for (size_t j = 0; j < db.size(); ++j) {
      Int num = mul_checked(da[i], f.matrix().at(j, i));
      if (num % db[j] != 0) throw input_error("dual hom entry is not integral");
      mat.at(i, j) = num / db[j];
    }
  return GroupHom(dual_source, dual_target, mat);
}

FiniteGroupSide group_side(const ExtensionSeq& ext, Int bound) {
  if (!ext.gstar->is_finite() || !ext.ghatstar->is_finite() || !ext.zstar->is_finite())
    throw unsupported_error("obstruction theory is implemented for finite extensions");
  FiniteGroupSide gs;
  gs.g = dual_finite(ext.gstar).dual;
  gs.ghat = dual_finite(ext.ghatstar).dual;
  gs.z = dual_finite(ext.zstar).dual;
  gs.q = dual_hom(ext.inc, gs.ghat, gs.g);
  gs.iota = dual_hom(ext.proj, gs.z, gs.ghat);
  gs.ghat_table = GroupTable::build(gs.ghat, bound);
  gs.g_table = GroupTable::build(gs.g, bound);
  gs.z_table = GroupTable::build(gs.z, bound);
  return gs;
}

namespace {

// G*-degree of an exponent of Z*-degree zero, through the embedded base.
GroupElement gstar_degree(const GStructure& s, const IntVec& exp) {
  // solve inc(x) = ghat_degree(exp)
  GroupElement deg = s.ghat_grading.degree_of(exp);
  IntMatrix sys =
      s.problem.ext.inc.matrix().hstack(relation_lattice(*s.problem.ext.ghatstar));
  IntSolve sol = solve_int(sys, deg.coords());
  if (!sol.solvable) throw input_error("exponent does not lie over the base grading");
  IntVec x(s.problem.ext.gstar->rank());
  std::copy(sol.particular.begin(), sol.particular.begin() + x.size(), x.begin());
  return s.problem.ext.gstar->element(x);
}

// alpha_g on a monomial unit of the zero Z*-component.
MonomialUnit alpha_on_unit(const GStructure& s, const FiniteGroupSide& gs, const GroupElement& g,
                           const MonomialUnit& u) {
  MonomialUnit out = u;
  out.phase += pair_elements(g, gstar_degree(s, u.exp));
  (void)gs;
  return out;
}

MonomialUnit unit_product(const MonomialAlgebraSpec::Ptr& spec, const MonomialUnit& a,
                          const MonomialUnit& b) {
  auto r = as_monomial_unit(unit_to_element(spec, a) * unit_to_element(spec, b));
  if (!r) throw input_error("unit product is not a monomial unit");
  return *r;
}

MonomialUnit unit_inverse(const MonomialAlgebraSpec::Ptr& spec, const MonomialUnit& a) {
  auto r = as_monomial_unit(unit_to_element(spec, a).star());
  if (!r) throw input_error("unit inverse is not a monomial unit");
  return *r;
}

// Crossed homomorphisms Z* -> U(Z(A)) as a presented module with explicit
// value tables (trivial Frohlich action; phases pair against Z*).
struct GauModel {
  GroupTable::Ptr zstar;            // table of Z*
  FgAbelianGroup::Ptr zstar_dual;   // phase-hom coordinates
  IntMatrix exp_basis;              // central exponent lattice of the base, in E_Ahat
  IntVec exp_orders;                // subgroup structure of that lattice
  // hom coordinates: dual(Z*) coords, then one coordinate (i, j) per
  // Z*-generator i and torsion exponent generator j
  std::vector<std::pair<size_t, size_t>> mixed_coords;
  IntVec orders;  // module orders, matching the coordinate list

  size_t dim() const { return orders.size(); }
};

GauModel build_gau_model(const GStructure& s, const FiniteGroupSide& gs) {
  GauModel gm;
  gm.zstar = gs.z_table;  // element order matches dual coordinates
  gm.zstar = GroupTable::build(s.problem.ext.zstar);
  gm.zstar_dual = gs.z;
  UnitModule units = central_units(s);
  if (!units.module->action_is_trivial())
    throw unsupported_error("obstruction model requires a trivial Frohlich action");
  gm.exp_basis = units.exponent_basis;
  gm.exp_orders = units.module->summand_count() > 1 ? units.module->summands()[1].orders
                                                    : IntVec{};
  const IntVec& zords = s.problem.ext.zstar->orders();
  for (Int d : gs.z->orders()) gm.orders.push_back(d);  // phase homs = dual(Z*)
  for (size_t i = 0; i < zords.size(); ++i)
    for (size_t j = 0; j < gm.exp_orders.size(); ++j) {
      if (gm.exp_orders[j] == 0) continue;  // Hom(Z/z, Z) = 0
      Int g = gcd_ll(zords[i], gm.exp_orders[j]);
      if (g <= 1) continue;
      gm.mixed_coords.emplace_back(i, j);
      gm.orders.push_back(g);
    }
  return gm;
}

// value table of the crossed hom with the given coordinates
std::vector<MonomialUnit> gau_values(const GStructure& s, const GauModel& gm,
                                     const IntVec& coords) {
  std::vector<MonomialUnit> out;
  size_t nh = s.ahat->gens();
  size_t zr = s.problem.ext.zstar->rank();
  const IntVec& zords = s.problem.ext.zstar->orders();
  for (const GroupElement& chi : gm.zstar->elems) {
    MonomialUnit u{Phase(), IntVec(nh, 0)};
    // phase-hom part: dual pairing
    for (size_t i = 0; i < zr; ++i)
      u.phase += Phase(mul_checked(coords[i], chi.coords()[i]), zords[i]);
    // mixed part: chi_i * (o_j / g) * basis_j scaled by the coordinate
    for (size_t t = 0; t < gm.mixed_coords.size(); ++t) {
      auto [i, j] = gm.mixed_coords[t];
      Int g = gm.orders[zr + t];
      Int step = gm.exp_orders[j] / g;
      Int factor = mul_checked(coords[zr + t], mul_checked(step, chi.coords()[i]));
      if (factor == 0) continue;
      for (size_t r = 0; r < nh; ++r)
        u.exp[r] = add_checked(u.exp[r], mul_checked(factor, gm.exp_basis.at(r, j)));
    }
    u.exp = s.ahat->reduce_exponent(std::move(u.exp));
    out.push_back(u);
  }
  return out;
}

// coordinates of a crossed hom given by its value table
IntVec gau_coords(const GStructure& s, const GauModel& gm,
                  const std::vector<MonomialUnit>& values) {
  size_t zr = s.problem.ext.zstar->rank();
  const IntVec& zords = s.problem.ext.zstar->orders();
  IntVec coords(gm.dim(), 0);
  // generator values determine everything
  for (size_t i = 0; i < zr; ++i) {
    IntVec gen(zr, 0);
    gen[i] = 1;
    size_t idx = gm.zstar->index_of(s.problem.ext.zstar->element(gen));
    const MonomialUnit& u = values[idx];
    // exponent part: solve in the central basis
    IntVec t(gm.exp_orders.size(), 0);
    bool has_exp = std::any_of(u.exp.begin(), u.exp.end(), [](Int v) { return v != 0; });
    if (has_exp) {
      IntMatrix sys = gm.exp_basis.hstack(relation_lattice(*s.ahat->exponent_group()));
      IntSolve sol = solve_int(sys, u.exp);
      if (!sol.solvable) throw input_error("gauge value exponent is not a central unit");
      std::copy(sol.particular.begin(), sol.particular.begin() + t.size(), t.begin());
    }
    for (size_t j = 0; j < t.size(); ++j) {
      if (t[j] == 0) continue;
      if (gm.exp_orders[j] == 0) {
        // free exponent directions admit no nonzero hom from a finite group
        Int red = t[j];
        if (red != 0) throw input_error("gauge value exponent has infinite order");
      }
      Int g = gcd_ll(zords[i], gm.exp_orders[j]);
      Int step = gm.exp_orders[j] / std::max<Int>(g, 1);
      // locate the mixed coordinate
      bool found = false;
      for (size_t m = 0; m < gm.mixed_coords.size(); ++m)
        if (gm.mixed_coords[m] == std::make_pair(i, j)) {
          Int red = ((t[j] % gm.exp_orders[j]) + gm.exp_orders[j]) % gm.exp_orders[j];
          if (red % step != 0)
            throw input_error("gauge value is not a homomorphism on the torsion");
          coords[zr + m] = (red / step) % g;
          found = true;
          break;
        }
      if (!found) {
        Int red = ((t[j] % gm.exp_orders[j]) + gm.exp_orders[j]) % gm.exp_orders[j];
        if (red != 0) throw input_error("gauge value exponent violates the hom constraints");
      }
    }
    // phase part: dual coordinate z_i * phase(gen_i) must be integral
    Phase ph = u.phase;
    Rat scaled = Rat(zords[i]) * ph.value();
    if (!scaled.is_integer()) throw input_error("gauge phase is not a character value");
    coords[i] = ((scaled.num() % zords[i]) + zords[i]) % zords[i];
  }
  // verify full table agreement
  std::vector<MonomialUnit> rebuilt = gau_values(s, gm, coords);
  for (size_t e = 0; e < rebuilt.size(); ++e) {
    if (!(rebuilt[e].phase == values[e].phase) ||
        !(unit_to_element(s.ahat, rebuilt[e]) == unit_to_element(s.ahat, values[e])))
      throw input_error("value table is not a crossed homomorphism of the model");
  }
  return coords;
}

}  // namespace

VFamily extend_v_family(
    const GStructure& s, const FiniteGroupSide& gs,
    const std::vector<std::pair<GroupElement, std::vector<MonomialUnit>>>& section_values) {
  const GroupTable& ghat = *gs.ghat_table;
  auto zt = GroupTable::build(s.problem.ext.zstar);
  size_t nz = zt->size();
  VFamily vf;
  vf.v.assign(ghat.size(), std::vector<MonomialUnit>(
                               nz, MonomialUnit{Phase(), IntVec(s.ahat->gens(), 0)}));
  std::vector<bool> set(ghat.size(), false);
  // identity row is trivial
  set[0] = true;
  for (const auto& [ghat_el, values] : section_values) {
    size_t gi = ghat.index_of(ghat_el);
    if (values.size() != nz) throw input_error("section values must cover all of Z*");
    vf.v[gi] = values;
    set[gi] = true;
  }
  // extend by equivariance along the Z-orbit
  for (const auto& z : gs.z_table->elems) {
    GroupElement iz = gs.iota.apply(z);
    for (size_t gi = 0; gi < ghat.size(); ++gi) {
      if (!set[gi]) continue;
      size_t target = ghat.index_of(iz + ghat.elems[gi]);
      if (set[target]) continue;
      for (size_t c = 0; c < nz; ++c) {
        MonomialUnit u = vf.v[gi][c];
        u.phase += pair_elements(z, zt->elems[c]);
        vf.v[target][c] = u;
      }
      set[target] = true;
    }
  }
  for (bool b : set)
    if (!b) throw input_error("section values do not cover every fibre");
  return vf;
}

bool v_family_check(const VFamily& vf, const GStructure& s, const FiniteGroupSide& gs) {
  const GroupTable& ghat = *gs.ghat_table;
  auto zt = GroupTable::build(s.problem.ext.zstar);
  size_t nz = zt->size();
  // normalization at the identity
  for (size_t c = 0; c < nz; ++c) {
    const MonomialUnit& u = vf.v[0][c];
    if (!u.phase.is_zero()) return false;
    for (Int v : u.exp)
      if (v != 0) return false;
  }
  // equivariance v_{iota(z) + ghat}(chi) = chi(z) v_ghat(chi)
  for (const auto& z : gs.z_table->elems)
    for (size_t gi = 0; gi < ghat.size(); ++gi) {
      size_t ti = ghat.index_of(gs.iota.apply(z) + ghat.elems[gi]);
      for (size_t c = 0; c < nz; ++c) {
        MonomialUnit expect = vf.v[gi][c];
        expect.phase += pair_elements(z, zt->elems[c]);
        if (!(unit_to_element(s.ahat, expect) == unit_to_element(s.ahat, vf.v[ti][c])))
          return false;
      }
    }
  // composition v_{g g'}(chi) = alpha_{q(g)}(v_{g'}(chi)) v_g(chi)
  for (size_t gi = 0; gi < ghat.size(); ++gi)
    for (size_t gj = 0; gj < ghat.size(); ++gj) {
      size_t tij = ghat.index_of(ghat.elems[gi] + ghat.elems[gj]);
      GroupElement g = gs.q.apply(ghat.elems[gi]);
      for (size_t c = 0; c < nz; ++c) {
        MonomialUnit rhs = unit_product(
            s.ahat, alpha_on_unit(s, gs, g, vf.v[gj][c]), vf.v[gi][c]);
        if (!(unit_to_element(s.ahat, rhs) == unit_to_element(s.ahat, vf.v[tij][c])))
          return false;
      }
    }
  return true;
}

MonomialAut lift_automorphism(const GStructure& s, const FiniteGroupSide& gs, const VFamily& vf,
                              const GroupElement& ghat_elem) {
  const GroupTable& ghat = *gs.ghat_table;
  auto zt = GroupTable::build(s.problem.ext.zstar);
  size_t gi = ghat.index_of(ghat_elem);
  GroupElement g = gs.q.apply(ghat_elem);
  size_t nh = s.ahat->gens();
  std::vector<MonomialUnit> images;
  for (size_t k = 0; k < nh; ++k) {
    IntVec e(nh, 0);
    e[k] = 1;
    GroupElement chi = s.zstar_degree(e);
    size_t ci = zt->index_of(chi);
    auto sexp = s.component_unit(chi);
    if (!sexp) throw unsupported_error("non-cleft component in the candidate lift");
    // u^e = y * u^{s(chi)} with y of Z*-degree zero
    Element y = Element::monomial(s.ahat, Phase(), e) *
                unit_to_element(s.ahat, unit_inverse(s.ahat, MonomialUnit{Phase(), *sexp}));
    auto yu = as_monomial_unit(y);
    if (!yu) throw input_error("candidate decomposition is not monomial");
    MonomialUnit ay = alpha_on_unit(s, gs, g, *yu);
    Element img = unit_to_element(s.ahat, ay) * unit_to_element(s.ahat, vf.v[gi][ci]) *
                  Element::monomial(s.ahat, Phase(), *sexp);
    auto iu = as_monomial_unit(img);
    if (!iu) throw input_error("candidate image is not monomial");
    images.push_back(*iu);
  }
  MonomialAut aut = MonomialAut::from_generator_images(s.ahat, images);
  // the lift must restrict to alpha_{q(ghat)} on the embedded base
  size_t na = s.problem.base_alg->gens();
  for (size_t j = 0; j < na; ++j) {
    IntVec e(na, 0);
    e[j] = 1;
    auto [xi, img] = s.embedding.apply_exponent(e);
    auto [ph, out] = aut.apply_monomial(img);
    Phase expect = pair_elements(g, s.problem.base_grading.degree_of(e));
    if (out != s.ahat->reduce_exponent(IntVec(img)) || !(ph == expect))
      throw input_error("candidate does not lift the base action");
    (void)xi;
  }
  return aut;
}

ObstructionReport delta_obstruction(const GStructure& s, const FiniteGroupSide& gs,
                                    const VFamily& vf) {
  ObstructionReport rep;
  auto zt = GroupTable::build(s.problem.ext.zstar);
  size_t nz = zt->size();
  const GroupTable& ghat = *gs.ghat_table;

  // conditions 1-4: identity row, equivariance (checked through the family),
  // and each row defining an automorphism lifting the base action
  for (size_t c = 0; c < nz; ++c) {
    const MonomialUnit& u = vf.v[0][c];
    bool zero = u.phase.is_zero() &&
                std::all_of(u.exp.begin(), u.exp.end(), [](Int v) { return v == 0; });
    if (!zero) throw input_error("candidate violates the identity normalization");
  }
  for (const auto& z : gs.z_table->elems)
    for (size_t gi = 0; gi < ghat.size(); ++gi) {
      size_t ti = ghat.index_of(gs.iota.apply(z) + ghat.elems[gi]);
      for (size_t c = 0; c < nz; ++c) {
        MonomialUnit expect = vf.v[gi][c];
        expect.phase += pair_elements(z, zt->elems[c]);
        if (!(unit_to_element(s.ahat, expect) == unit_to_element(s.ahat, vf.v[ti][c])))
          throw input_error("candidate violates the fibre equivariance condition");
      }
    }
  std::vector<MonomialAut> lifts;
  for (size_t gi = 0; gi < ghat.size(); ++gi)
    lifts.push_back(lift_automorphism(s, gs, vf, ghat.elems[gi]));

  // fix a section of q and compute delta(g, g') as a gauge table
  const GroupTable& gt_g = *gs.g_table;
  std::vector<size_t> section(gt_g.size(), 0);
  for (size_t gi = 0; gi < gt_g.size(); ++gi) {
    bool found = false;
    for (size_t hi = 0; hi < ghat.size() && !found; ++hi)
      if (gs.q.apply(ghat.elems[hi]) == gt_g.elems[gi]) {
        section[gi] = hi;
        found = true;
      }
    if (!found) throw input_error("quotient map is not surjective on the group side");
  }

  GauModel gm = build_gau_model(s, gs);
  rep.delta.assign(gt_g.size(), std::vector<GaugeTable>(gt_g.size()));
  // coefficient module: the gauge group with the conjugation action of G
  std::vector<ModuleSummand> summands(1);
  summands[0].orders = gm.orders;
  std::vector<std::vector<IntMatrix>> action(1);
  // S(g) multiplies values by alpha_g: compute matrix columns generator-wise
  for (size_t gg = 0; gg < gs.g->rank(); ++gg) {
    IntVec gen(gs.g->rank(), 0);
    gen[gg] = 1;
    GroupElement g = gs.g->element(gen);
    IntMatrix mat(gm.dim(), gm.dim());
    for (size_t col = 0; col < gm.dim(); ++col) {
      IntVec e(gm.dim(), 0);
      e[col] = 1;
      std::vector<MonomialUnit> vals = gau_values(s, gm, e);
      for (auto& u : vals) u = alpha_on_unit(s, gs, g, u);
      IntVec img = gau_coords(s, gm, vals);
      for (size_t r = 0; r < gm.dim(); ++r) mat.at(r, col) = img[r];
    }
    action[0].push_back(mat);
  }
  CoeffModule::Ptr gau_mod = CoeffModule::make(gs.g, summands, action);

  Cochain delta(gs.g_table, gau_mod, 2);
  for (size_t a = 0; a < gt_g.size(); ++a)
    for (size_t b = 0; b < gt_g.size(); ++b) {
      size_t ab = gt_g.add[a][b];
      MonomialAut comp = lifts[section[a]]
                             .compose(lifts[section[b]])
                             .compose(lifts[section[ab]].inverse());
      // read the gauge automorphism off the designated component units
      std::vector<MonomialUnit> values;
      for (size_t c = 0; c < nz; ++c) {
        auto sexp = s.component_unit(zt->elems[c]);
        auto [ph, img] = comp.apply_monomial(*sexp);
        Element ratio = Element::monomial(s.ahat, ph, img) *
                        unit_to_element(s.ahat,
                                        unit_inverse(s.ahat, MonomialUnit{Phase(), *sexp}));
        auto ru = as_monomial_unit(ratio);
        if (!ru) throw input_error("obstruction value is not a monomial unit");
        values.push_back(*ru);
      }
      GaugeTable gtab{values};
      rep.delta[a][b] = gtab;
      ModuleValue v = gau_mod->zero_value();
      v[0].z = gau_coords(s, gm, values);
      delta.set_value({a, b}, v);
    }

  rep.cocycle_verified = is_cocycle(delta);
  if (!rep.cocycle_verified) throw input_error("obstruction table is not an S-twisted cocycle");

  CoboundaryResult cb = is_coboundary(delta);
  rep.trivial = cb.is_coboundary;
  if (!rep.trivial) {
    rep.certificate = cb.certificate;
    return rep;
  }
  // phi: G -> Gau trivializing delta; corrected family v'_g(chi) =
  // phi(q(g))(chi)^{-1} v_g(chi)
  rep.phi.assign(gt_g.size(), GaugeTable{});
  for (size_t a = 0; a < gt_g.size(); ++a) {
    ModuleValue v = cb.primitive->value({a});
    rep.phi[a].values = gau_values(s, gm, v[0].z);
  }
  VFamily corrected = vf;
  for (size_t hi = 0; hi < ghat.size(); ++hi) {
    size_t a = gt_g.index_of(gs.q.apply(ghat.elems[hi]));
    for (size_t c = 0; c < nz; ++c)
      corrected.v[hi][c] =
          unit_product(s.ahat, unit_inverse(s.ahat, rep.phi[a].values[c]), vf.v[hi][c]);
  }
  rep.corrected = corrected;
  return rep;
}

}  // namespace nclift
