#include "nclift/cochain.hpp"

namespace nclift {

Cochain::Cochain(GroupTable::Ptr gt, CoeffModule::Ptr mod, int degree)
    : gt_(std::move(gt)), mod_(std::move(mod)), degree_(degree) {
  if (degree_ < 0 || degree_ > 3) throw input_error("cochain degree must be 0..3");
  tuples_ = 1;
  for (int i = 0; i < degree_; ++i) tuples_ *= gt_->size();
  ztab_.resize(mod_->summand_count());
  ptab_.resize(mod_->summand_count());
  for (size_t s = 0; s < mod_->summand_count(); ++s) {
    if (mod_->summands()[s].divisible)
      ptab_[s].assign(tuples_, Phase());
    else
      ztab_[s].assign(tuples_ * mod_->summands()[s].dim(), 0);
  }
}

std::vector<size_t> Cochain::unrank(size_t t) const {
  std::vector<size_t> args(degree_);
  size_t m = gt_->size();
  for (int i = 0; i < degree_; ++i) {
    args[i] = t % m;
    t /= m;
  }
  return args;
}

size_t Cochain::rank(const std::vector<size_t>& args) const {
  if (args.size() != static_cast<size_t>(degree_)) throw input_error("cochain arity mismatch");
  size_t m = gt_->size(), t = 0;
  for (size_t i = args.size(); i-- > 0;) {
    if (args[i] >= m) throw input_error("cochain argument out of range");
    t = t * m + args[i];
  }
  return t;
}

bool Cochain::args_hit_identity(const std::vector<size_t>& args) const {
  for (size_t a : args)
    if (a == 0) return true;
  return false;
}

ModuleValue Cochain::value(const std::vector<size_t>& args) const {
  size_t t = rank(args);
  ModuleValue v = mod_->zero_value();
  for (size_t s = 0; s < mod_->summand_count(); ++s) {
    if (mod_->summands()[s].divisible) {
      v[s].ph = ptab_[s][t];
    } else {
      size_t dim = mod_->summands()[s].dim();
      v[s].z.assign(ztab_[s].begin() + t * dim, ztab_[s].begin() + (t + 1) * dim);
    }
  }
  return v;
}

void Cochain::set_value(const std::vector<size_t>& args, const ModuleValue& v) {
  ModuleValue r = mod_->reduce(v);
  if (args_hit_identity(args) && !mod_->is_zero(r))
    throw input_error("normalized cochain: value at the identity must vanish");
  size_t t = rank(args);
  for (size_t s = 0; s < mod_->summand_count(); ++s) {
    if (mod_->summands()[s].divisible) {
      ptab_[s][t] = r[s].ph;
    } else {
      size_t dim = mod_->summands()[s].dim();
      std::copy(r[s].z.begin(), r[s].z.end(), ztab_[s].begin() + t * dim);
    }
  }
}

bool Cochain::is_zero() const {
  for (const auto& tab : ztab_)
    for (Int v : tab)
      if (v != 0) return false;
  for (const auto& tab : ptab_)
    for (const Phase& p : tab)
      if (!p.is_zero()) return false;
  return true;
}

Cochain Cochain::add(const Cochain& other) const {
  if (other.degree_ != degree_ || other.gt_ != gt_ || other.mod_ != mod_)
    throw input_error("cochain addition mismatch");
  Cochain out(gt_, mod_, degree_);
  for (size_t t = 0; t < tuples_; ++t) {
    auto args = unrank(t);
    out.set_value(args, mod_->add(value(args), other.value(args)));
  }
  return out;
}

Cochain Cochain::negate() const {
  Cochain out(gt_, mod_, degree_);
  for (size_t t = 0; t < tuples_; ++t) {
    auto args = unrank(t);
    out.set_value(args, mod_->negate(value(args)));
  }
  return out;
}

bool Cochain::equal(const Cochain& other) const {
  if (other.degree_ != degree_) return false;
  for (size_t t = 0; t < tuples_; ++t) {
    auto args = unrank(t);
    if (!mod_->equal(value(args), other.value(args))) return false;
  }
  return true;
}

Cochain Cochain::differential() const {
  if (degree_ > 2) throw unsupported_error("differential implemented for degrees 0..2");
  Cochain out(gt_, mod_, degree_ + 1);
  size_t m = gt_->size();
  int n = degree_;
  std::vector<size_t> args(n + 1);
  for (size_t t = 0; t < out.tuples_; ++t) {
    args = out.unrank(t);
    // face 0: twisted by the leading argument
    std::vector<size_t> rest(args.begin() + 1, args.end());
    ModuleValue acc = mod_->apply(gt_->elems[args[0]], value(rest));
    // middle faces: merge adjacent arguments
    for (int i = 1; i <= n; ++i) {
      std::vector<size_t> merged;
      merged.reserve(n);
      for (int k = 0; k < i - 1; ++k) merged.push_back(args[k]);
      merged.push_back(gt_->add[args[i - 1]][args[i]]);
      for (int k = i + 1; k <= n; ++k) merged.push_back(args[k]);
      ModuleValue v = value(merged);
      acc = (i % 2) ? mod_->add(acc, mod_->negate(v)) : mod_->add(acc, v);
    }
    // last face
    std::vector<size_t> head(args.begin(), args.end() - 1);
    ModuleValue v = value(head);
    acc = ((n + 1) % 2) ? mod_->add(acc, mod_->negate(v)) : mod_->add(acc, v);
    out.set_value(args, acc);
  }
  (void)m;
  return out;
}

Cochain Cochain::inflate(const Cochain& on_g, const GroupHom& q, GroupTable::Ptr ghat_table) {
  if (!q.is_surjective()) throw input_error("inflation requires a surjective quotient map");
  if (q.source() != ghat_table->group)
    throw input_error("inflation: table does not match the covering group");
  // The coefficient module acts through the quotient; rebuild it over Ghat.
  const CoeffModule& m = *on_g.module();
  std::vector<std::vector<IntMatrix>> mats(m.summand_count());
  for (size_t s = 0; s < m.summand_count(); ++s)
    for (const auto& gen : ghat_table->group->generators())
      mats[s].push_back(m.action_matrix(s, q.apply(gen)));
  CoeffModule::Ptr lifted = CoeffModule::make(ghat_table->group, m.summands(), mats);

  Cochain out(std::move(ghat_table), lifted, on_g.degree());
  const GroupTable& ghat = *out.group_table();
  const GroupTable& g = *on_g.group_table();
  for (size_t t = 0; t < out.tuple_count(); ++t) {
    auto args = out.unrank(t);
    std::vector<size_t> mapped(args.size());
    for (size_t i = 0; i < args.size(); ++i)
      mapped[i] = g.index_of(q.apply(ghat.elems[args[i]]));
    // values constant on cosets by construction
    out.set_value(args, on_g.value(mapped));
  }
  return out;
}

}  // namespace nclift
