#include "nclift/coeff_module.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nclift {

size_t GroupTable::index_of(const GroupElement& e) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].coords() == e.coords()) return i;
  throw input_error("element not in group table");
}

GroupTable::Ptr GroupTable::build(const FgAbelianGroup::Ptr& g, Int bound) {
  auto t = std::make_shared<GroupTable>();
  t->group = g;
  t->elems = g->enumerate(bound);
  std::map<IntVec, size_t> idx;
  for (size_t i = 0; i < t->elems.size(); ++i) idx[t->elems[i].coords()] = i;
  if (!t->elems[0].is_zero()) throw input_error("enumeration must start at the identity");
  size_t m = t->elems.size();
  t->add.assign(m, std::vector<size_t>(m));
  t->neg.assign(m, 0);
  for (size_t i = 0; i < m; ++i) {
    t->neg[i] = idx.at((-t->elems[i]).coords());
    for (size_t j = 0; j < m; ++j) t->add[i][j] = idx.at((t->elems[i] + t->elems[j]).coords());
  }
  return t;
}

namespace {

IntMatrix reduce_matrix(const IntMatrix& m, const IntVec& orders) {
  IntMatrix out = m;
  for (size_t i = 0; i < out.rows(); ++i) {
    if (orders[i] == 0) continue;
    for (size_t j = 0; j < out.cols(); ++j) {
      out.at(i, j) %= orders[i];
      if (out.at(i, j) < 0) out.at(i, j) += orders[i];
    }
  }
  return out;
}

bool matrix_equal_mod(const IntMatrix& a, const IntMatrix& b, const IntVec& orders) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      Int diff = a.at(i, j) - b.at(i, j);
      if (orders[i] == 0 ? diff != 0 : diff % orders[i] != 0) return false;
    }
  return true;
}

}  // namespace

CoeffModule::Ptr CoeffModule::trivial(FgAbelianGroup::Ptr acting,
                                      std::vector<ModuleSummand> summands) {
  std::vector<std::vector<IntMatrix>> mats(summands.size());
  for (size_t s = 0; s < summands.size(); ++s)
    mats[s].assign(acting->rank(), IntMatrix::identity(summands[s].dim()));
  return make(std::move(acting), std::move(summands), std::move(mats));
}

CoeffModule::Ptr CoeffModule::cyclic(FgAbelianGroup::Ptr acting, Int n,
                                     const IntVec& generator_units) {
  ModuleSummand s;
  s.orders = {n};
  std::vector<IntMatrix> mats;
  for (size_t g = 0; g < acting->rank(); ++g) {
    Int u = g < generator_units.size() ? generator_units[g] : 1;
    mats.push_back(IntMatrix{{u}});
  }
  return make(std::move(acting), {s}, {mats});
}

CoeffModule::Ptr CoeffModule::divisible(FgAbelianGroup::Ptr acting,
                                        const IntVec& generator_signs) {
  ModuleSummand s;
  s.divisible = true;
  std::vector<IntMatrix> mats;
  for (size_t g = 0; g < acting->rank(); ++g) {
    Int u = g < generator_signs.size() ? generator_signs[g] : 1;
    if (u != 1 && u != -1) throw input_error("divisible summand action must be a sign");
    mats.push_back(IntMatrix{{u}});
  }
  return make(std::move(acting), {s}, {mats});
}

CoeffModule::Ptr CoeffModule::lattice(FgAbelianGroup::Ptr acting, size_t k,
                                      const std::vector<IntMatrix>& generator_mats) {
  ModuleSummand s;
  s.orders.assign(k, 0);
  std::vector<IntMatrix> mats = generator_mats;
  while (mats.size() < acting->rank()) mats.push_back(IntMatrix::identity(k));
  return make(std::move(acting), {s}, {mats});
}

CoeffModule::Ptr CoeffModule::make(FgAbelianGroup::Ptr acting,
                                   std::vector<ModuleSummand> summands,
                                   std::vector<std::vector<IntMatrix>> action_mats) {
  auto mod = std::shared_ptr<CoeffModule>(new CoeffModule());
  mod->acting_ = std::move(acting);
  mod->summands_ = std::move(summands);
  mod->action_ = std::move(action_mats);
  if (mod->action_.size() != mod->summands_.size())
    throw input_error("coefficient module: one action list per summand required");
  const auto& orders = mod->acting_->orders();
  for (size_t s = 0; s < mod->summands_.size(); ++s) {
    const ModuleSummand& sm = mod->summands_[s];
    auto& mats = mod->action_[s];
    if (mats.size() != mod->acting_->rank())
      throw input_error("coefficient module: one action matrix per acting generator required");
    IntVec mod_orders = sm.divisible ? IntVec{0} : sm.orders;
    for (size_t g = 0; g < mats.size(); ++g) {
      if (mats[g].rows() != sm.dim() || mats[g].cols() != sm.dim())
        throw input_error("coefficient module: action matrix shape mismatch");
      if (sm.divisible) {
        Int u = mats[g].at(0, 0);
        if (u != 1 && u != -1) throw input_error("divisible summand action must be a sign");
      }
      if (orders[g] != 0) {
        IntMatrix power = IntMatrix::identity(sm.dim());
        for (Int k = 0; k < orders[g]; ++k) power = reduce_matrix(power * mats[g], mod_orders);
        if (!matrix_equal_mod(power, IntMatrix::identity(sm.dim()), mod_orders))
          throw input_error("coefficient module: action violates acting-group relations");
      }
      for (size_t h = 0; h < g; ++h)
        if (!matrix_equal_mod(mats[g] * mats[h], mats[h] * mats[g], mod_orders))
          throw input_error("coefficient module: action matrices must commute");
      if (!sm.divisible)
        for (size_t i = 0; i < sm.orders.size(); ++i)
          for (size_t j = 0; j < sm.orders.size(); ++j)
            if (sm.orders[j] != 0) {
              Int v = mul_checked(mats[g].at(i, j), sm.orders[j]);
              if (sm.orders[i] == 0 ? v != 0 : v % sm.orders[i] != 0)
                throw input_error("coefficient module: action does not preserve torsion");
            }
    }
  }
  return mod;
}

bool CoeffModule::action_is_trivial() const {
  for (size_t s = 0; s < summands_.size(); ++s) {
    IntVec mod_orders = summands_[s].divisible ? IntVec{0} : summands_[s].orders;
    for (const auto& m : action_[s])
      if (!matrix_equal_mod(m, IntMatrix::identity(summands_[s].dim()), mod_orders)) return false;
  }
  return true;
}

IntMatrix CoeffModule::action_matrix(size_t summand, const GroupElement& a) const {
  const ModuleSummand& sm = summands_[summand];
  IntMatrix out = IntMatrix::identity(sm.dim());
  const IntVec& orders = acting_->orders();
  for (size_t g = 0; g < acting_->rank(); ++g) {
    Int e = a.coords()[g];
    if (e == 0) continue;
    IntMatrix base = action_[summand][g];
    if (e < 0) {
      if (orders[g] != 0) {
        e = ((e % orders[g]) + orders[g]) % orders[g];
      } else {
        std::vector<IntVec> cols;
        for (size_t j = 0; j < base.rows(); ++j) {
          IntVec rhs(base.rows(), 0);
          rhs[j] = 1;
          IntSolve s = solve_int(base, rhs);
          if (!s.solvable) throw input_error("lattice action matrix is not invertible");
          cols.push_back(s.particular);
        }
        base = IntMatrix::from_columns(base.rows(), cols);
        e = -e;
      }
    }
    IntVec mod_orders = sm.divisible ? IntVec{0} : sm.orders;
    for (Int k = 0; k < e; ++k) out = reduce_matrix(out * base, mod_orders);
  }
  return out;
}

Int CoeffModule::action_sign(size_t summand, const GroupElement& a) const {
  Int u = action_matrix(summand, a).at(0, 0);
  return u == 1 ? 1 : -1;
}

ModuleValue CoeffModule::zero_value() const {
  ModuleValue v(summands_.size());
  for (size_t s = 0; s < summands_.size(); ++s)
    if (!summands_[s].divisible) v[s].z.assign(summands_[s].dim(), 0);
  return v;
}

ModuleValue CoeffModule::apply(const GroupElement& a, const ModuleValue& v) const {
  ModuleValue out = v;
  for (size_t s = 0; s < summands_.size(); ++s) {
    if (summands_[s].divisible) {
      out[s].ph = action_sign(s, a) == 1 ? v[s].ph : -v[s].ph;
    } else {
      out[s].z = action_matrix(s, a) * v[s].z;
    }
  }
  return reduce(std::move(out));
}

ModuleValue CoeffModule::add(const ModuleValue& a, const ModuleValue& b) const {
  ModuleValue out = a;
  for (size_t s = 0; s < summands_.size(); ++s) {
    if (summands_[s].divisible) {
      out[s].ph = a[s].ph + b[s].ph;
    } else {
      for (size_t i = 0; i < out[s].z.size(); ++i)
        out[s].z[i] = add_checked(a[s].z[i], b[s].z[i]);
    }
  }
  return reduce(std::move(out));
}

ModuleValue CoeffModule::negate(const ModuleValue& v) const {
  ModuleValue out = v;
  for (size_t s = 0; s < summands_.size(); ++s) {
    if (summands_[s].divisible) {
      out[s].ph = -v[s].ph;
    } else {
      for (auto& x : out[s].z) x = -x;
    }
  }
  return reduce(std::move(out));
}

ModuleValue CoeffModule::reduce(ModuleValue v) const {
  for (size_t s = 0; s < summands_.size(); ++s) {
    if (summands_[s].divisible) continue;
    const IntVec& o = summands_[s].orders;
    for (size_t i = 0; i < o.size(); ++i) {
      if (o[i] == 0) continue;
      v[s].z[i] %= o[i];
      if (v[s].z[i] < 0) v[s].z[i] += o[i];
    }
  }
  return v;
}

bool CoeffModule::equal(const ModuleValue& a, const ModuleValue& b) const {
  for (size_t s = 0; s < summands_.size(); ++s) {
    if (summands_[s].divisible) {
      if (!(a[s].ph == b[s].ph)) return false;
    } else if (a[s].z != b[s].z) {
      return false;
    }
  }
  return true;
}

bool CoeffModule::is_zero(const ModuleValue& v) const { return equal(v, zero_value()); }

std::string CoeffModule::str() const {
  std::ostringstream os;
  for (size_t s = 0; s < summands_.size(); ++s) {
    if (s) os << " + ";
    if (summands_[s].divisible) {
      os << "Q/Z";
    } else {
      bool first = true;
      size_t free = 0;
      for (Int o : summands_[s].orders) {
        if (o == 0) {
          ++free;
          continue;
        }
        os << (first ? "" : " + ") << "Z/" << o;
        first = false;
      }
      if (free) {
        os << (first ? "" : " + ") << "Z";
        if (free > 1) os << "^" << free;
        first = false;
      }
      if (first) os << "0";
    }
  }
  if (summands_.empty()) os << "0";
  return os.str();
}

}  // namespace nclift
