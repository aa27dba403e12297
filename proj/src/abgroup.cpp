#include "nclift/abgroup.hpp"

#include <algorithm>
#include <sstream>

namespace nclift {

namespace {

struct SnfPair {
  IntMatrix u, u_inv;
  IntVec full_orders;  // one per presentation generator
};

SnfPair presentation_snf(size_t n, const IntMatrix& relations) {
  if (relations.rows() != n) throw input_error("relation matrix must have one row per generator");
  SnfResult f = snf(relations);
  SnfPair out;
  out.u = f.u;
  // Invert the unimodular row transform column by column.
  std::vector<IntVec> cols;
  for (size_t j = 0; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    cols.push_back(solve_int(f.u, e).particular);
  }
  out.u_inv = IntMatrix::from_columns(n, cols);
  out.full_orders.assign(n, 0);
  IntVec d = f.diag();
  for (size_t i = 0; i < n && i < d.size(); ++i) out.full_orders[i] = d[i];
  return out;
}

}  // namespace

FgAbelianGroup::Ptr FgAbelianGroup::from_relations(size_t n, const IntMatrix& relations) {
  auto g = std::shared_ptr<FgAbelianGroup>(new FgAbelianGroup());
  g->gen_count_ = n;
  SnfPair p = presentation_snf(n, relations);
  g->u_ = p.u;
  g->u_inv_ = p.u_inv;
  for (size_t i = 0; i < n; ++i) {
    if (p.full_orders[i] == 1) continue;
    g->keep_.push_back(i);
    g->orders_.push_back(p.full_orders[i]);
    if (p.full_orders[i] == 0) ++g->free_rank_;
  }
  return g;
}

FgAbelianGroup::Ptr FgAbelianGroup::from_orders(const IntVec& torsion, size_t free_rank) {
  IntVec full = torsion;
  full.insert(full.end(), free_rank, 0);
  IntMatrix rel(full.size(), torsion.size());
  for (size_t i = 0; i < torsion.size(); ++i) rel.at(i, i) = torsion[i];
  return from_relations(full.size(), rel);
}

Int FgAbelianGroup::order() const {
  if (!is_finite()) throw size_error("group is infinite");
  Int n = 1;
  for (Int d : orders_) n = mul_checked(n, d);
  return n;
}

IntVec FgAbelianGroup::reduce_presentation(const IntVec& x) const {
  if (x.size() != gen_count_) throw input_error("presentation coordinate length mismatch");
  IntVec y = u_ * x;
  IntVec coords(orders_.size());
  for (size_t k = 0; k < keep_.size(); ++k) coords[k] = y[keep_[k]];
  return reduce(std::move(coords));
}

IntVec FgAbelianGroup::reduce(IntVec coords) const {
  if (coords.size() != orders_.size()) throw input_error("coordinate length mismatch");
  for (size_t i = 0; i < coords.size(); ++i) {
    if (orders_[i] == 0) continue;
    coords[i] %= orders_[i];
    if (coords[i] < 0) coords[i] += orders_[i];
  }
  return coords;
}

IntVec FgAbelianGroup::lift_to_presentation(const IntVec& coords) const {
  if (coords.size() != orders_.size()) throw input_error("coordinate length mismatch");
  IntVec y(gen_count_, 0);
  for (size_t k = 0; k < keep_.size(); ++k) y[keep_[k]] = coords[k];
  return u_inv_ * y;
}

GroupElement FgAbelianGroup::element(IntVec coords) const {
  return GroupElement(shared_from_this(), reduce(std::move(coords)));
}

GroupElement FgAbelianGroup::element_from_presentation(const IntVec& x) const {
  return GroupElement(shared_from_this(), reduce_presentation(x));
}

GroupElement FgAbelianGroup::zero() const { return element(IntVec(rank(), 0)); }

std::vector<GroupElement> FgAbelianGroup::generators() const {
  std::vector<GroupElement> gens;
  for (size_t i = 0; i < rank(); ++i) {
    IntVec c(rank(), 0);
    c[i] = 1;
    gens.push_back(element(c));
  }
  return gens;
}

std::vector<GroupElement> FgAbelianGroup::enumerate(Int bound) const {
  if (!is_finite()) throw size_error("cannot enumerate an infinite group");
  Int n = order();
  if (n > bound) throw size_error("group order exceeds the enumeration bound");
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(n));
  if (rank() == 0) {
    out.push_back(zero());
    return out;
  }
  IntVec c(rank(), 0);
  while (true) {
    out.push_back(element(c));
    size_t i = 0;
    for (; i < c.size(); ++i) {
      if (++c[i] < orders_[i]) break;
      c[i] = 0;
    }
    if (i == c.size()) break;
  }
  return out;
}

std::string FgAbelianGroup::str() const {
  if (orders_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  size_t zcount = 0;
  for (Int d : orders_) {
    if (d == 0) {
      ++zcount;
      continue;
    }
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (zcount > 0) {
    os << (first ? "" : " + ") << "Z";
    if (zcount > 1) os << "^" << zcount;
  }
  return os.str();
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int v) { return v == 0; });
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (a.owner_ != b.owner_) throw input_error("group element owner mismatch");
  IntVec c(a.coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = add_checked(a.coords_[i], b.coords_[i]);
  return a.owner_->element(std::move(c));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

GroupElement GroupElement::operator-() const {
  IntVec c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return owner_->element(std::move(c));
}

GroupElement operator*(Int n, const GroupElement& a) {
  IntVec c(a.coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = mul_checked(n, a.coords_[i]);
  return a.owner_->element(std::move(c));
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.owner_ != b.owner_) {
    if (!a.owner_ || !b.owner_ || !a.owner_->same_structure(*b.owner_))
      throw input_error("group element owner mismatch");
  }
  return a.coords_ == b.coords_;
}

Int GroupElement::order() const {
  const IntVec& d = owner_->orders();
  Int n = 1;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (d[i] == 0) throw size_error("element has infinite order");
    n = lcm_ll(n, d[i] / gcd_ll(coords_[i], d[i]));
  }
  return n;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ")";
  return os.str();
}

IntMatrix relation_lattice(const FgAbelianGroup& g) {
  std::vector<IntVec> cols;
  for (size_t i = 0; i < g.rank(); ++i) {
    if (g.orders()[i] == 0) continue;
    IntVec c(g.rank(), 0);
    c[i] = g.orders()[i];
    cols.push_back(c);
  }
  return IntMatrix::from_columns(g.rank(), cols);
}

GroupHom::GroupHom(FgAbelianGroup::Ptr source, FgAbelianGroup::Ptr target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_->rank() || matrix_.cols() != source_->rank())
    throw input_error("hom matrix shape mismatch");
  // d_j * image(e_j) must vanish in the target for torsion generators.
  for (size_t j = 0; j < source_->rank(); ++j) {
    Int d = source_->orders()[j];
    if (d == 0) continue;
    IntVec img(target_->rank());
    for (size_t i = 0; i < target_->rank(); ++i) img[i] = mul_checked(d, matrix_.at(i, j));
    if (!target_->element(img).is_zero())
      throw input_error("hom does not respect the source relations");
  }
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  if (x.owner() != source_ && !(x.owner() && x.owner()->same_structure(*source_)))
    throw input_error("hom applied to element of the wrong group");
  return target_->element(matrix_ * x.coords());
}

IntMatrix GroupHom::image_lattice_with_relations() const {
  return matrix_.hstack(relation_lattice(*target_));
}

IntMatrix GroupHom::kernel_lattice_with_relations() const {
  // {x : M x in relations(target)} via the x-part of the integer kernel of
  // [M | R_target], joined with the source relations.
  IntMatrix sys = matrix_.hstack(relation_lattice(*target_));
  std::vector<IntVec> cols;
  for (const IntVec& k : int_kernel(sys)) {
    IntVec x(source_->rank());
    std::copy(k.begin(), k.begin() + source_->rank(), x.begin());
    cols.push_back(x);
  }
  IntMatrix kern = IntMatrix::from_columns(source_->rank(), cols);
  return kern.hstack(relation_lattice(*source_));
}

bool GroupHom::is_injective() const {
  if (source_->rank() == 0) return true;
  IntMatrix kern = kernel_lattice_with_relations();
  IntMatrix rel = relation_lattice(*source_);
  IntMatrix probe = rel.cols() ? rel : IntMatrix(source_->rank(), 0);
  for (size_t j = 0; j < kern.cols(); ++j)
    if (!lattice_contains(probe, kern.column(j))) return false;
  return true;
}

bool GroupHom::is_surjective() const {
  if (target_->rank() == 0) return true;
  SnfResult f = snf(image_lattice_with_relations());
  IntVec d = f.diag();
  if (d.size() < target_->rank()) return false;
  for (size_t i = 0; i < target_->rank(); ++i)
    if (d[i] != 1) return false;
  return true;
}

namespace {

bool lattices_equal(const IntMatrix& a, const IntMatrix& b) {
  for (size_t j = 0; j < a.cols(); ++j)
    if (!lattice_contains(b, a.column(j))) return false;
  for (size_t j = 0; j < b.cols(); ++j)
    if (!lattice_contains(a, b.column(j))) return false;
  return true;
}

}  // namespace

ExtensionSeq::ExtensionSeq(FgAbelianGroup::Ptr gs, FgAbelianGroup::Ptr gh,
                           FgAbelianGroup::Ptr zs, GroupHom i, GroupHom p)
    : gstar(std::move(gs)), ghatstar(std::move(gh)), zstar(std::move(zs)), inc(std::move(i)),
      proj(std::move(p)) {
  if (inc.source() != gstar || inc.target() != ghatstar || proj.source() != ghatstar ||
      proj.target() != zstar)
    throw input_error("extension maps do not match the listed groups");
  if (!inc.is_injective()) throw input_error("extension: inc is not injective");
  if (!proj.is_surjective()) throw input_error("extension: proj is not surjective");
  if (ghatstar->rank() > 0 &&
      !lattices_equal(inc.image_lattice_with_relations(), proj.kernel_lattice_with_relations()))
    throw input_error("extension: image(inc) != kernel(proj)");
}

Phase Character::pair(const GroupElement& a) const { return pair_elements(chi, a); }

Phase pair_elements(const GroupElement& chi, const GroupElement& a) {
  const auto& da = a.owner()->orders();
  if (chi.owner()->orders() != da) throw input_error("pairing: dual group mismatch");
  Phase p;
  for (size_t i = 0; i < da.size(); ++i) {
    if (da[i] == 0) throw input_error("pairing requires a finite group");
    p += Phase(mul_checked(chi.coords()[i], a.coords()[i]), da[i]);
  }
  return p;
}

DualGroup dual_finite(const FgAbelianGroup::Ptr& a) {
  if (!a->is_finite()) throw unsupported_error("dual_finite requires a finite group");
  return DualGroup{FgAbelianGroup::from_orders(a->orders(), 0), a};
}

LatticeExtension extension_from_lattice(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw input_error("lattice matrix must be square");
  size_t n = m.rows();
  if (m.det() == 0) throw input_error("lattice matrix must be invertible");
  IntMatrix mt = m.transpose();
  auto gstar = FgAbelianGroup::from_orders({}, n);
  auto ghatstar = FgAbelianGroup::from_orders({}, n);
  auto zstar = FgAbelianGroup::from_relations(n, mt);

  // Ghatstar = (M^T)^{-1} Z^n written in the basis given by the columns of
  // (M^T)^{-1}; the inclusion of Z^n then has matrix M^T and the projection
  // onto Z^n / M^T Z^n sends the basis to the presentation generators.
  GroupHom inc(gstar, ghatstar, mt);
  std::vector<IntVec> proj_cols;
  for (size_t j = 0; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    proj_cols.push_back(zstar->reduce_presentation(e));
  }
  GroupHom proj(ghatstar, zstar, IntMatrix::from_columns(zstar->rank(), proj_cols));

  return LatticeExtension{ExtensionSeq(gstar, ghatstar, zstar, inc, proj),
                          FgAbelianGroup::from_relations(n, m)};
}

}  // namespace nclift
