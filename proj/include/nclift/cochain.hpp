#ifndef NCLIFT_COCHAIN_HPP
#define NCLIFT_COCHAIN_HPP

#include <vector>

#include "nclift/coeff_module.hpp"

namespace nclift {

/// Normalized cochain of degree 0..3 on a finite abelian group with values in
/// a coefficient module. Tables are stored over all argument tuples; entries
/// with an identity argument are forced to zero.
class Cochain {
 public:
  Cochain(GroupTable::Ptr gt, CoeffModule::Ptr mod, int degree);

  int degree() const { return degree_; }
  const GroupTable::Ptr& group_table() const { return gt_; }
  const CoeffModule::Ptr& module() const { return mod_; }

  size_t tuple_count() const { return tuples_; }
  /// Mixed-radix decoding of a tuple index into element indices.
  std::vector<size_t> unrank(size_t t) const;
  size_t rank(const std::vector<size_t>& args) const;

  ModuleValue value(const std::vector<size_t>& args) const;
  /// Setting a nonzero value on a tuple containing the identity is rejected.
  void set_value(const std::vector<size_t>& args, const ModuleValue& v);

  bool is_zero() const;
  Cochain add(const Cochain& other) const;
  Cochain negate() const;
  bool equal(const Cochain& other) const;

  /// Bar-resolution differential with the module's twist; degree <= 2.
  Cochain differential() const;

  /// Pullback along a surjection q: Ghat -> G of a cochain living on G.
  static Cochain inflate(const Cochain& on_g, const GroupHom& q, GroupTable::Ptr ghat_table);

  /// Flat integer table of one presented summand (coordinate-major within
  /// each tuple); used by the linear-algebra layer.
  const std::vector<Int>& ztable(size_t summand) const { return ztab_[summand]; }
  std::vector<Int>& ztable(size_t summand) { return ztab_[summand]; }
  const std::vector<Phase>& ptable(size_t summand) const { return ptab_[summand]; }
  std::vector<Phase>& ptable(size_t summand) { return ptab_[summand]; }

 private:
  bool args_hit_identity(const std::vector<size_t>& args) const;

  GroupTable::Ptr gt_;
  CoeffModule::Ptr mod_;
  int degree_;
  size_t tuples_;
  std::vector<std::vector<Int>> ztab_;    // per summand, size tuples * dim
  std::vector<std::vector<Phase>> ptab_;  // per divisible summand, size tuples
};

}  // namespace nclift

#endif
