#ifndef NCLIFT_ABGROUP_HPP
#define NCLIFT_ABGROUP_HPP

#include <memory>
#include <string>
#include <vector>

#include "nclift/intmat.hpp"
#include "nclift/phase.hpp"

namespace nclift {

class GroupElement;

/// Finitely generated abelian group presented by generators and relations,
/// normalized through the Smith form of the relation matrix. Elements are
/// stored in normal-form coordinates: one coordinate per invariant factor
/// (trivial factors dropped), torsion coordinates reduced into [0, d).
class FgAbelianGroup : public std::enable_shared_from_this<FgAbelianGroup> {
 public:
  using Ptr = std::shared_ptr<const FgAbelianGroup>;

  /// Group Z^n / colspan(R); R must have n rows.
  static Ptr from_relations(size_t n, const IntMatrix& relations);
  /// Direct sum of Z/d for the listed torsion orders plus Z^free_rank.
  static Ptr from_orders(const IntVec& torsion, size_t free_rank);

  /// Invariant-factor orders per normal-form coordinate, torsion first
  /// (ascending divisibility chain), then zeros for the free coordinates.
  const IntVec& orders() const { return orders_; }
  size_t rank() const { return orders_.size(); }
  size_t free_rank() const { return free_rank_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return orders_.empty(); }
  /// Order of the group; throws for infinite groups.
  Int order() const;

  size_t presentation_rank() const { return gen_count_; }

  /// Reduces presentation coordinates (length presentation_rank) to normal form.
  IntVec reduce_presentation(const IntVec& x) const;
  /// Reduces normal-form coordinates (length rank) canonically.
  IntVec reduce(IntVec coords) const;
  /// Lifts normal-form coordinates back to presentation coordinates.
  IntVec lift_to_presentation(const IntVec& coords) const;

  GroupElement element(IntVec coords) const;
  GroupElement element_from_presentation(const IntVec& x) const;
  GroupElement zero() const;
  std::vector<GroupElement> generators() const;

  /// All elements in normal form; requires |A| <= bound.
  std::vector<GroupElement> enumerate(Int bound = 4096) const;

  bool same_structure(const FgAbelianGroup& other) const { return orders_ == other.orders_; }
  std::string str() const;

 private:
  FgAbelianGroup() = default;

  size_t gen_count_ = 0;
  size_t free_rank_ = 0;
  IntVec orders_;           // kept invariant factors, 0 for free
  std::vector<size_t> keep_;  // indices of kept SNF coordinates
  IntMatrix u_, u_inv_;     // SNF row transform of the relation matrix
};

/// Element of an FgAbelianGroup in reduced normal-form coordinates.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FgAbelianGroup::Ptr owner, IntVec coords)
      : owner_(std::move(owner)), coords_(std::move(coords)) {}

  const FgAbelianGroup::Ptr& owner() const { return owner_; }
  const IntVec& coords() const { return coords_; }
  bool is_zero() const;

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  GroupElement operator-() const;
  friend GroupElement operator*(Int n, const GroupElement& a);
  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.coords_ < b.coords_;
  }

  /// Order of the element; throws if infinite.
  Int order() const;

  std::string str() const;

 private:
  FgAbelianGroup::Ptr owner_;
  IntVec coords_;
};

/// Homomorphism between f.g. abelian groups, given by an integer matrix on
/// normal-form coordinates (columns = images of the source generators).
/// Well-definedness on torsion generators is checked at construction.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(FgAbelianGroup::Ptr source, FgAbelianGroup::Ptr target, IntMatrix matrix);

  const FgAbelianGroup::Ptr& source() const { return source_; }
  const FgAbelianGroup::Ptr& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement apply(const GroupElement& x) const;

  bool is_injective() const;
  bool is_surjective() const;

  /// Lattice (in target normal-form coordinates) spanned by the image
  /// together with the target relations.
  IntMatrix image_lattice_with_relations() const;
  /// Lattice of x (normal-form coordinates of the source, as integer vectors)
  /// with apply(x) = 0, including the source relations.
  IntMatrix kernel_lattice_with_relations() const;

 private:
  FgAbelianGroup::Ptr source_, target_;
  IntMatrix matrix_;
};

/// Relation lattice of a group in its own normal-form coordinates.
IntMatrix relation_lattice(const FgAbelianGroup& g);

/// Short exact sequence 0 -> Gstar -> Ghatstar -> Zstar -> 0 of discrete
/// duals; exactness is verified at construction.
struct ExtensionSeq {
  FgAbelianGroup::Ptr gstar, ghatstar, zstar;
  GroupHom inc;   // Gstar -> Ghatstar
  GroupHom proj;  // Ghatstar -> Zstar

  ExtensionSeq(FgAbelianGroup::Ptr gs, FgAbelianGroup::Ptr gh, FgAbelianGroup::Ptr zs,
               GroupHom i, GroupHom p);
};

/// Character of a finite group A, i.e. an element of the dual group paired
/// against A through the invariant factors.
struct Character {
  GroupElement chi;                 // element of dual(A)
  FgAbelianGroup::Ptr primal;       // A itself

  Phase pair(const GroupElement& a) const;
};

/// Dual of a finite group: a group with identical invariant factors together
/// with the bi-additive pairing <chi, a> = sum chi_i a_i / d_i.
struct DualGroup {
  FgAbelianGroup::Ptr dual;
  FgAbelianGroup::Ptr primal;

  Character character(const GroupElement& chi_el) const { return Character{chi_el, primal}; }
};

DualGroup dual_finite(const FgAbelianGroup::Ptr& a);

/// Bi-additive pairing of a dual element against a group element.
Phase pair_elements(const GroupElement& chi, const GroupElement& a);

/// The dualized quantum-torus covering extension of an invertible integer
/// matrix M: 0 -> Z^n -> (M^T)^{-1} Z^n -> Z^n / M^T Z^n -> 0, presented with
/// Ghatstar = Z^n in the basis (M^T)^{-1} so that inc has matrix M^T and proj
/// is the coordinate quotient. Also exposes Z = Z^n / M Z^n.
struct LatticeExtension {
  ExtensionSeq seq;
  FgAbelianGroup::Ptr z_group;  // Z^n / M Z^n
};

LatticeExtension extension_from_lattice(const IntMatrix& m);

}  // namespace nclift

#endif
