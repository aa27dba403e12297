#include "nclift/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace nclift {

namespace {

constexpr size_t kBarEntryCap = 8'000'000;   // dense differential matrix cap
constexpr size_t kMixedRowCap = 1'500;       // graph-path cap for mixed moduli

// Tuple indexing over non-identity arguments (element indices 1..m-1).
struct NormIdx {
  size_t m1;
  int n;
  size_t count;
  NormIdx(size_t m, int deg) : m1(m - 1), n(deg) {
    count = 1;
    for (int i = 0; i < n; ++i) count *= m1;
  }
  std::vector<size_t> unrank(size_t t) const {
    std::vector<size_t> a(n);
    for (int i = 0; i < n; ++i) {
      a[i] = t % m1 + 1;
      t /= m1;
    }
    return a;
  }
  size_t rank(const std::vector<size_t>& a) const {
    size_t t = 0;
    for (size_t i = a.size(); i-- > 0;) t = t * m1 + (a[i] - 1);
    return t;
  }
};

// Summand in working form: plain coordinates with orders plus cached action
// matrices per group element. A divisible summand enters with orders {w}.
struct WorkSummand {
  IntVec orders;
  std::vector<IntMatrix> elem_action;  // per element index

  size_t dim() const { return orders.size(); }
  bool uniform(Int& n) const {
    if (orders.empty()) return false;
    n = orders[0];
    for (Int o : orders)
      if (o != n) return false;
    return true;
  }
};

WorkSummand working_summand(const GroupTable& gt, const CoeffModule& mod, size_t s,
                            Int divisible_modulus) {
  WorkSummand ws;
  const ModuleSummand& sm = mod.summands()[s];
  if (sm.divisible) {
    ws.orders = {divisible_modulus};
    for (size_t i = 0; i < gt.size(); ++i)
      ws.elem_action.push_back(IntMatrix{{mod.action_sign(s, gt.elems[i])}});
  } else {
    ws.orders = sm.orders;
    for (size_t i = 0; i < gt.size(); ++i)
      ws.elem_action.push_back(mod.action_matrix(s, gt.elems[i]));
  }
  return ws;
}

// Normalized bar differential matrix, degree n -> n+1, for one summand.
IntMatrix bar_matrix(const GroupTable& gt, const WorkSummand& ws, int n) {
  NormIdx src(gt.size(), n), dst(gt.size(), n + 1);
  size_t dim = ws.dim();
  size_t rows = dst.count * dim, cols = src.count * dim;
  if (rows * cols > kBarEntryCap)
    throw size_error("cohomology: differential matrix exceeds the exact dense path cap");
  IntMatrix d(rows, cols);
  auto add_block = [&](size_t row_tuple, size_t col_tuple, const IntMatrix& blk, Int sign) {
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j)
        d.at(row_tuple * dim + i, col_tuple * dim + j) =
            add_checked(d.at(row_tuple * dim + i, col_tuple * dim + j),
                        mul_checked(sign, blk.at(i, j)));
  };
  IntMatrix ident = IntMatrix::identity(dim);
  for (size_t t = 0; t < dst.count; ++t) {
    auto args = dst.unrank(t);
    // face 0: twist by the leading argument
    {
      std::vector<size_t> rest(args.begin() + 1, args.end());
      add_block(t, src.rank(rest), ws.elem_action[args[0]], 1);
    }
    // middle faces: merge arguments i-1 and i (dropped if the sum is 0)
    for (int i = 1; i <= n; ++i) {
      size_t merged = gt.add[args[i - 1]][args[i]];
      if (merged == 0) continue;
      std::vector<size_t> tup;
      tup.reserve(n);
      for (int k = 0; k < i - 1; ++k) tup.push_back(args[k]);
      tup.push_back(merged);
      for (int k = i + 1; k <= n; ++k) tup.push_back(args[k]);
      add_block(t, src.rank(tup), ident, (i % 2) ? -1 : 1);
    }
    // last face
    {
      std::vector<size_t> head(args.begin(), args.end() - 1);
      add_block(t, src.rank(head), ident, ((n + 1) % 2) ? -1 : 1);
    }
  }
  return d;
}

// Relation columns o_c * e_(tuple, c) of the normalized cochain module C^n.
IntMatrix relation_columns(const WorkSummand& ws, size_t tuples) {
  size_t dim = ws.dim();
  std::vector<IntVec> cols;
  for (size_t t = 0; t < tuples; ++t)
    for (size_t c = 0; c < dim; ++c) {
      if (ws.orders[c] == 0) continue;
      IntVec col(tuples * dim, 0);
      col[t * dim + c] = ws.orders[c];
      cols.push_back(col);
    }
  return IntMatrix::from_columns(tuples * dim, cols);
}

// Lattice of cocycles {x : D x = 0 mod row orders} in Z^cols.
IntMatrix cocycle_lattice(const IntMatrix& d, const WorkSummand& ws) {
  Int n = 0;
  std::vector<IntVec> basis;
  if (ws.uniform(n)) {
    basis = kernel_mod_uniform(d, n);
  } else {
    if (d.rows() > kMixedRowCap)
      throw size_error("cohomology: mixed-order module too large for the exact path");
    // integer kernel of [D | -R_rows], x part
    size_t dim = ws.dim();
    size_t row_tuples = d.rows() / dim;
    IntMatrix rrel = relation_columns(ws, row_tuples);
    for (size_t i = 0; i < rrel.rows(); ++i)
      for (size_t j = 0; j < rrel.cols(); ++j) rrel.at(i, j) = -rrel.at(i, j);
    IntMatrix sys = d.hstack(rrel);
    for (const IntVec& k : int_kernel(sys)) {
      IntVec x(d.cols());
      std::copy(k.begin(), k.begin() + d.cols(), x.begin());
      basis.push_back(x);
    }
  }
  return IntMatrix::from_columns(d.cols(), basis);
}

struct SummandH {
  IntVec factors;                  // quotient invariant factors (0 = free)
  std::vector<IntVec> generators;  // cocycle tables over normalized coords
};

// H^n for one summand as ker(d_n)/im(d_{n-1}) by exact lattice arithmetic.
SummandH summand_cohomology(const GroupTable& gt, const WorkSummand& ws, int n) {
  IntMatrix dn = bar_matrix(gt, ws, n);
  IntMatrix dprev = bar_matrix(gt, ws, n - 1);
  IntMatrix kern = cocycle_lattice(dn, ws);
  NormIdx src(gt.size(), n);
  IntMatrix srel = relation_columns(ws, src.count);
  IntMatrix bound = dprev.hstack(srel);
  QuotientStructure q = quotient_structure(kern, bound);
  return SummandH{q.factors, q.generators};
}

// The image of H(level w0) inside H(level w1) under mu_{w0} -> mu_{w1};
// for divisible coefficients this image is the exact answer once levels
// exceed |A|^2 (|A|-torsion), which the stabilization check enforces.
SummandH divisible_image(const GroupTable& gt, const CoeffModule& mod, size_t s, int n, Int w0,
                         Int w1) {
  WorkSummand ws0 = working_summand(gt, mod, s, w0);
  WorkSummand ws1 = working_summand(gt, mod, s, w1);
  SummandH h0 = summand_cohomology(gt, ws0, n);
  Int scale = w1 / w0;
  IntMatrix dprev1 = bar_matrix(gt, ws1, n - 1);
  NormIdx src(gt.size(), n);
  IntMatrix bound1 = dprev1.hstack(relation_columns(ws1, src.count));
  // lattice spanned by the scaled level-0 representatives plus boundaries
  std::vector<IntVec> gens;
  for (const IntVec& g : h0.generators) {
    IntVec scaled(g.size());
    for (size_t i = 0; i < g.size(); ++i) scaled[i] = mul_checked(g[i], scale);
    gens.push_back(scaled);
  }
  size_t ambient = src.count * ws1.dim();
  IntMatrix span = IntMatrix::from_columns(ambient, gens).hstack(bound1);
  QuotientStructure q = quotient_structure(span, bound1);
  return SummandH{q.factors, q.generators};
}

IntVec canonical_factors(IntVec factors) {
  // renormalize a multiset of cyclic orders into an invariant-factor chain
  IntVec torsion;
  for (Int f : factors)
    if (f > 1) torsion.push_back(f);
  if (torsion.empty()) return {};
  IntMatrix rel(torsion.size(), torsion.size());
  for (size_t i = 0; i < torsion.size(); ++i) rel.at(i, i) = torsion[i];
  return FgAbelianGroup::from_relations(torsion.size(), rel)->orders();
}

Cochain table_to_cochain(const GroupTable::Ptr& gt, const CoeffModule::Ptr& mod, int degree,
                         size_t summand, const IntVec& table, Int divisible_modulus) {
  Cochain c(gt, mod, degree);
  NormIdx idx(gt->size(), degree);
  size_t dim = mod->summands()[summand].divisible ? 1 : mod->summands()[summand].dim();
  for (size_t t = 0; t < idx.count; ++t) {
    auto args = idx.unrank(t);
    ModuleValue v = mod->zero_value();
    if (mod->summands()[summand].divisible) {
      v[summand].ph = Phase(table[t], divisible_modulus);
    } else {
      v[summand].z.assign(table.begin() + t * dim, table.begin() + (t + 1) * dim);
    }
    c.set_value(args, v);
  }
  return c;
}

}  // namespace

std::string CohomologyGroup::str() const {
  std::ostringstream os;
  bool first = true;
  for (Int d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (free_rank) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  if (divisible_rank) {
    os << (first ? "" : " + ") << "Q/Z";
    if (divisible_rank > 1) os << "^" << divisible_rank;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CohomologyGroup cohomology_group(const GroupTable::Ptr& gt, const CoeffModule::Ptr& mod, int n) {
  if (n < 1 || n > 3) throw unsupported_error("cohomology implemented for degrees 1..3");
  CohomologyGroup out;
  out.degree = n;
  IntVec factors;
  Int m = static_cast<Int>(gt->size());
  for (size_t s = 0; s < mod->summand_count(); ++s) {
    SummandH h;
    Int rep_modulus = 0;
    if (mod->summands()[s].divisible) {
      // levels |A|^2 -> |A|^3 with a stabilization check one level up
      Int w0 = mul_checked(m, m), w1 = mul_checked(w0, m), w2 = mul_checked(w1, m);
      h = divisible_image(*gt, *mod, s, n, w0, w1);
      SummandH check = divisible_image(*gt, *mod, s, n, w1, w2);
      if (canonical_factors(h.factors) != canonical_factors(check.factors))
        throw unsupported_error("divisible coefficients: image stabilization check failed");
      rep_modulus = w1;
    } else {
      h = summand_cohomology(*gt, working_summand(*gt, *mod, s, 0), n);
    }
    for (size_t i = 0; i < h.factors.size(); ++i) {
      if (h.factors[i] == 0) {
        ++out.free_rank;
      } else {
        factors.push_back(h.factors[i]);
      }
      out.reps.push_back(table_to_cochain(gt, mod, n, s, h.generators[i], rep_modulus));
    }
  }
  out.torsion = canonical_factors(factors);
  return out;
}

CohomologyGroup h2_structural(const FgAbelianGroup::Ptr& a, const CoeffModule::Ptr& mod) {
  if (!mod->action_is_trivial())
    throw unsupported_error("h2_structural requires a trivial action");
  bool all_divisible = true;
  for (const auto& s : mod->summands())
    if (!s.divisible) all_divisible = false;
  if (!all_divisible && a->free_rank() != a->rank())
    throw unsupported_error(
        "h2_structural with non-divisible coefficients requires a free group (Ext terms)");

  CohomologyGroup out;
  out.degree = 2;
  IntVec factors;
  const IntVec& ords = a->orders();
  for (size_t i = 0; i < ords.size(); ++i)
    for (size_t j = i + 1; j < ords.size(); ++j) {
      // order of the wedge pair e_i ^ e_j
      Int p;
      if (ords[i] == 0 && ords[j] == 0)
        p = 0;
      else if (ords[i] == 0)
        p = ords[j];
      else if (ords[j] == 0)
        p = ords[i];
      else
        p = gcd_ll(ords[i], ords[j]);
      for (size_t s = 0; s < mod->summand_count(); ++s) {
        const ModuleSummand& sm = mod->summands()[s];
        if (sm.divisible) {
          BilinearRep rep{i, j, s, 0, p, 0, Phase(), false};
          if (p == 0) {
            ++out.divisible_rank;
            rep.family = true;
          } else {
            factors.push_back(p);
            rep.pval = Phase(1, p);
          }
          out.bilinear_reps.push_back(rep);
        } else {
          for (size_t c = 0; c < sm.dim(); ++c) {
            Int o = sm.orders[c];
            if (p == 0) {
              // Hom(Z, coord) = the coordinate itself
              BilinearRep rep{i, j, s, c, o, 1, Phase(), o == 0};
              if (o == 0)
                ++out.free_rank;
              else
                factors.push_back(o);
              out.bilinear_reps.push_back(rep);
            } else if (o != 0) {
              Int ord = gcd_ll(p, o);
              if (ord > 1) {
                factors.push_back(ord);
                out.bilinear_reps.push_back(BilinearRep{i, j, s, c, ord, o / ord, Phase(), false});
              }
            }
          }
        }
      }
    }
  out.torsion = canonical_factors(factors);
  out.note = "structural: Hom(wedge^2 A, M)";
  return out;
}

CohomologyGroup ext_group(const FgAbelianGroup::Ptr& a) {
  CohomologyGroup out;
  out.degree = 2;
  std::ostringstream os;
  os << "Ext(A, Q/Z) = 0: ";
  bool any = false;
  for (Int d : a->orders()) {
    if (d == 0) continue;
    os << (any ? "; " : "") << "d=" << d << ": every c = p/q has c = " << d << "*(p/(" << d
       << "q))";
    any = true;
  }
  if (!any) os << "A is free, Ext vanishes";
  out.note = os.str();
  return out;
}

Degree1Groups crossed_homs(const GroupTable::Ptr& gt, const CoeffModule::Ptr& mod) {
  Degree1Groups out;
  out.z1.degree = out.b1.degree = out.h1.degree = 1;
  IntVec fz, fb, fh;
  Int m = static_cast<Int>(gt->size());
  for (size_t s = 0; s < mod->summand_count(); ++s) {
    bool divisible = mod->summands()[s].divisible;
    Int w0 = divisible ? mul_checked(m, m) : 0;
    Int w1 = divisible ? mul_checked(w0, m) : 0;

    auto compute = [&](Int level) {
      WorkSummand ws = working_summand(*gt, *mod, s, level);
      IntMatrix d1 = bar_matrix(*gt, ws, 1);
      IntMatrix d0 = bar_matrix(*gt, ws, 0);
      NormIdx src(gt->size(), 1);
      IntMatrix kern = cocycle_lattice(d1, ws);
      IntMatrix srel = relation_columns(ws, src.count);
      IntMatrix bound = d0.hstack(srel);
      struct R {
        QuotientStructure z, b, h;
      } r{quotient_structure(kern, srel), quotient_structure(bound, srel),
          quotient_structure(kern, bound)};
      return r;
    };
    auto r0 = compute(w0);
    if (divisible) {
      // factors that scale with the level are divisible summands
      auto r1 = compute(w1);
      auto classify = [&](const QuotientStructure& lo, const QuotientStructure& hi,
                          IntVec& factors, size_t& div_rank, CohomologyGroup& grp,
                          bool keep_reps) {
        if (lo.factors.size() != hi.factors.size())
          throw unsupported_error("crossed homs: divisible level comparison mismatch");
        for (size_t i = 0; i < lo.factors.size(); ++i) {
          if (hi.factors[i] == lo.factors[i]) {
            if (lo.factors[i] == 0)
              ++grp.free_rank;
            else
              factors.push_back(lo.factors[i]);
          } else if (lo.factors[i] != 0 && hi.factors[i] == mul_checked(lo.factors[i], m)) {
            ++div_rank;
          } else {
            throw unsupported_error("crossed homs: unstable divisible structure");
          }
          if (keep_reps)
            grp.reps.push_back(table_to_cochain(gt, mod, 1, s, hi.generators[i], w1));
        }
      };
      classify(r0.z, r1.z, fz, out.z1.divisible_rank, out.z1, true);
      classify(r0.b, r1.b, fb, out.b1.divisible_rank, out.b1, false);
      classify(r0.h, r1.h, fh, out.h1.divisible_rank, out.h1, true);
    } else {
      auto absorb = [&](const QuotientStructure& q, IntVec& factors, CohomologyGroup& grp,
                        bool keep_reps) {
        for (size_t i = 0; i < q.factors.size(); ++i) {
          if (q.factors[i] == 0)
            ++grp.free_rank;
          else
            factors.push_back(q.factors[i]);
          if (keep_reps) grp.reps.push_back(table_to_cochain(gt, mod, 1, s, q.generators[i], 0));
        }
      };
      absorb(r0.z, fz, out.z1, true);
      absorb(r0.b, fb, out.b1, false);
      absorb(r0.h, fh, out.h1, true);
    }
  }
  out.z1.torsion = canonical_factors(fz);
  out.b1.torsion = canonical_factors(fb);
  out.h1.torsion = canonical_factors(fh);
  return out;
}

CohomologyGroup crossed_homs_structural(const FgAbelianGroup::Ptr& a,
                                        const CoeffModule::Ptr& mod) {
  if (!mod->action_is_trivial())
    throw unsupported_error("structural crossed homs require a trivial action");
  CohomologyGroup out;
  out.degree = 1;
  IntVec factors;
  for (Int d : a->orders()) {
    for (const auto& sm : mod->summands()) {
      if (d == 0) {
        // Hom(Z, M) = M
        if (sm.divisible) {
          ++out.divisible_rank;
        } else {
          for (Int o : sm.orders) {
            if (o == 0)
              ++out.free_rank;
            else
              factors.push_back(o);
          }
        }
      } else {
        // Hom(Z/d, M) = d-torsion of M
        if (sm.divisible) {
          factors.push_back(d);
        } else {
          for (Int o : sm.orders) {
            if (o == 0) continue;
            Int g = gcd_ll(d, o);
            if (g > 1) factors.push_back(g);
          }
        }
      }
    }
  }
  out.torsion = canonical_factors(factors);
  out.note = "structural: Hom(A, M)";
  return out;
}

bool is_cocycle(const Cochain& c) {
  const GroupTable& gt = *c.group_table();
  const CoeffModule& mod = *c.module();
  int n = c.degree();
  size_t m = gt.size();
  size_t total = 1;
  for (int i = 0; i <= n; ++i) total *= m;
  std::vector<size_t> args(n + 1);
  for (size_t t = 0; t < total; ++t) {
    size_t x = t;
    for (int i = 0; i <= n; ++i) {
      args[i] = x % m;
      x /= m;
    }
    std::vector<size_t> rest(args.begin() + 1, args.end());
    ModuleValue acc = mod.apply(gt.elems[args[0]], c.value(rest));
    for (int i = 1; i <= n; ++i) {
      std::vector<size_t> tup;
      tup.reserve(n);
      for (int k = 0; k < i - 1; ++k) tup.push_back(args[k]);
      tup.push_back(gt.add[args[i - 1]][args[i]]);
      for (int k = i + 1; k <= n; ++k) tup.push_back(args[k]);
      ModuleValue v = c.value(tup);
      acc = (i % 2) ? mod.add(acc, mod.negate(v)) : mod.add(acc, v);
    }
    std::vector<size_t> head(args.begin(), args.end() - 1);
    ModuleValue v = c.value(head);
    acc = ((n + 1) % 2) ? mod.add(acc, mod.negate(v)) : mod.add(acc, v);
    if (!mod.is_zero(acc)) return false;
  }
  return true;
}

CoboundaryResult is_coboundary(const Cochain& c) {
  int n = c.degree();
  if (n < 1 || n > 3) throw unsupported_error("is_coboundary implemented for degrees 1..3");
  if (!is_cocycle(c)) throw input_error("is_coboundary: input is not a cocycle");
  const GroupTable::Ptr& gt = c.group_table();
  const CoeffModule::Ptr& mod = c.module();
  Int m = static_cast<Int>(gt->size());
  NormIdx dst(gt->size(), n), src(gt->size(), n - 1);

  CoboundaryResult out;
  out.is_coboundary = true;
  Cochain primitive(gt, mod, n - 1);
  std::ostringstream cert;

  for (size_t s = 0; s < mod->summand_count() && out.is_coboundary; ++s) {
    bool divisible = mod->summands()[s].divisible;
    Int level = 0;
    if (divisible) {
      // denominators present in the table, raised by |A|^2 (coboundary over
      // Q/Z iff coboundary at this conductor; see the module notes)
      Int den = 1;
      for (const Phase& p : c.ptable(s)) den = lcm_ll(den, p.den());
      level = mul_checked(den, mul_checked(m, m));
    }
    WorkSummand ws = working_summand(*gt, *mod, s, level);
    IntMatrix d = bar_matrix(*gt, ws, n - 1);
    size_t dim = ws.dim();
    IntVec rhs(dst.count * dim, 0);
    for (size_t t = 0; t < dst.count; ++t) {
      auto args = dst.unrank(t);
      if (divisible) {
        const Phase& p = c.ptable(s)[c.rank(args)];
        rhs[t] = p.value().num() * (level / p.den());
      } else {
        size_t full = c.rank(args);
        for (size_t k = 0; k < dim; ++k) rhs[t * dim + k] = c.ztable(s)[full * dim + k];
      }
    }

    auto solve_summand = [&](Int lvl) -> ModSolve {
      Int uniform = 0;
      WorkSummand w = divisible ? working_summand(*gt, *mod, s, lvl) : ws;
      IntMatrix dd = divisible ? bar_matrix(*gt, w, n - 1) : d;
      IntVec r = rhs;
      if (divisible && lvl != level)
        for (auto& x : r) x = mul_checked(x, lvl / level);
      if (w.uniform(uniform)) return solve_mod_uniform(dd, r, uniform);
      // mixed orders: augment with row relation columns
      if (dd.rows() > kMixedRowCap)
        throw size_error("is_coboundary: mixed-order module too large for the exact path");
      IntMatrix rrel = relation_columns(w, dst.count);
      IntMatrix sys = dd.hstack(rrel);
      ModSolve ms = solve_mod_uniform(sys, r, 0);
      if (ms.solvable) ms.solution.resize(dd.cols());
      return ms;
    };

    ModSolve sol = solve_summand(level);
    if (divisible && !mod->action_is_trivial()) {
      // falsifiable cross-check one level up for twisted divisible modules
      ModSolve sol2 = solve_summand(mul_checked(level, m));
      if (sol.solvable != sol2.solvable)
        throw unsupported_error("is_coboundary: divisible level check unstable");
    }
    if (!sol.solvable) {
      out.is_coboundary = false;
      cert << "summand " << s << ": " << sol.certificate;
      break;
    }
    for (size_t t = 0; t < src.count; ++t) {
      auto args = src.unrank(t);
      ModuleValue v = primitive.value(args);
      if (divisible) {
        v[s].ph = Phase(sol.solution[t], level);
      } else {
        v[s].z.assign(sol.solution.begin() + t * dim, sol.solution.begin() + (t + 1) * dim);
      }
      primitive.set_value(args, v);
    }
  }
  if (out.is_coboundary) {
    out.primitive = primitive;
  } else {
    out.certificate = cert.str();
  }
  return out;
}

}  // namespace nclift
