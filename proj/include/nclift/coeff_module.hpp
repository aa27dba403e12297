#ifndef NCLIFT_COEFF_MODULE_HPP
#define NCLIFT_COEFF_MODULE_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "nclift/abgroup.hpp"
#include "nclift/phase.hpp"

namespace nclift {

/// Enumerated finite group with add/neg lookup tables; the identity sits at
/// index 0.
struct GroupTable {
  using Ptr = std::shared_ptr<const GroupTable>;

  FgAbelianGroup::Ptr group;
  std::vector<GroupElement> elems;
  std::vector<std::vector<size_t>> add;
  std::vector<size_t> neg;

  size_t size() const { return elems.size(); }
  size_t index_of(const GroupElement& e) const;

  static Ptr build(const FgAbelianGroup::Ptr& g, Int bound = 4096);
};

/// One direct summand of a coefficient module. Every finite or free summand
/// is kept in presented form (coordinates with orders, 0 meaning a free Z
/// coordinate); the divisible summand Q/Z carries Phase values.
struct ModuleSummand {
  bool divisible = false;
  IntVec orders;  // presented form; for divisible this is empty

  size_t dim() const { return divisible ? 1 : orders.size(); }
};

/// Value of one summand: integer coordinates for presented summands, a phase
/// for the divisible summand.
struct SummandValue {
  IntVec z;
  Phase ph;
};

using ModuleValue = std::vector<SummandValue>;

/// Z*-module of coefficients: a direct sum of presented and divisible
/// summands with an action of the acting group that preserves the summand
/// decomposition. Actions are given per acting-group generator; divisible
/// summands act through {+1, -1}.
class CoeffModule {
 public:
  using Ptr = std::shared_ptr<const CoeffModule>;

  /// Trivial action of `acting` on the given summands.
  static Ptr trivial(FgAbelianGroup::Ptr acting, std::vector<ModuleSummand> summands);
  /// Cyclic module mu_N with a unit action per generator.
  static Ptr cyclic(FgAbelianGroup::Ptr acting, Int n, const IntVec& generator_units = {});
  /// Divisible module Q/Z with a sign action per generator.
  static Ptr divisible(FgAbelianGroup::Ptr acting, const IntVec& generator_signs = {});
  /// Lattice module Z^k with matrices in GL_k(Z) per generator.
  static Ptr lattice(FgAbelianGroup::Ptr acting, size_t k,
                     const std::vector<IntMatrix>& generator_mats = {});
  /// General direct sum; action_mats[s][g] acts on summand s for generator g.
  static Ptr make(FgAbelianGroup::Ptr acting, std::vector<ModuleSummand> summands,
                  std::vector<std::vector<IntMatrix>> action_mats);

  const FgAbelianGroup::Ptr& acting() const { return acting_; }
  const std::vector<ModuleSummand>& summands() const { return summands_; }
  size_t summand_count() const { return summands_.size(); }
  bool action_is_trivial() const;

  /// Action matrix of a group element on one summand.
  IntMatrix action_matrix(size_t summand, const GroupElement& a) const;
  /// Sign of the action on a divisible summand (+1 or -1).
  Int action_sign(size_t summand, const GroupElement& a) const;

  ModuleValue zero_value() const;
  ModuleValue apply(const GroupElement& a, const ModuleValue& v) const;
  ModuleValue add(const ModuleValue& a, const ModuleValue& b) const;
  ModuleValue negate(const ModuleValue& v) const;
  ModuleValue reduce(ModuleValue v) const;
  bool equal(const ModuleValue& a, const ModuleValue& b) const;
  bool is_zero(const ModuleValue& v) const;

  std::string str() const;

 private:
  CoeffModule() = default;

  FgAbelianGroup::Ptr acting_;
  std::vector<ModuleSummand> summands_;
  // action_[s][g] = matrix of generator g on summand s (1x1 sign matrices for
  // divisible summands)
  std::vector<std::vector<IntMatrix>> action_;
};

}  // namespace nclift

#endif
