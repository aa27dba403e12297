#ifndef NCLIFT_MONOMIAL_AUT_HPP
#define NCLIFT_MONOMIAL_AUT_HPP

#include "nclift/monomial.hpp"

namespace nclift {

/// *-automorphism of monomial shape: u^a -> e^{2 pi i tau(a)} u^{psi(a)} with
/// tau additive and psi an automorphism of the exponent group. Relation
/// preservation and invertibility are checked at construction.
class MonomialAut {
 public:
  static MonomialAut make(MonomialAlgebraSpec::Ptr spec, std::vector<Phase> tau, IntMatrix psi);
  static MonomialAut identity(MonomialAlgebraSpec::Ptr spec);
  /// Gauge-type automorphism u^a -> phase(a) u^{a + shift(a)} given per
  /// generator; a thin wrapper over make().
  static MonomialAut from_generator_images(MonomialAlgebraSpec::Ptr spec,
                                           const std::vector<MonomialUnit>& images);

  const MonomialAlgebraSpec::Ptr& spec() const { return spec_; }
  const std::vector<Phase>& tau() const { return tau_; }
  const IntMatrix& psi() const { return psi_; }

  Phase tau_of(const IntVec& a) const;
  std::pair<Phase, IntVec> apply_monomial(const IntVec& a) const;
  Element apply(const Element& x) const;

  MonomialAut compose(const MonomialAut& inner) const;  // this after inner
  MonomialAut inverse() const;
  bool equal(const MonomialAut& other) const;
  bool is_identity() const;

  /// True when the automorphism fixes the listed exponents elementwise.
  bool fixes(const std::vector<IntVec>& exponents) const;

 private:
  MonomialAut() = default;

  MonomialAlgebraSpec::Ptr spec_;
  std::vector<Phase> tau_;
  IntMatrix psi_, psi_inv_;
};

/// Conjugation x -> s^{-1} x s by an invertible monomial, as a MonomialAut.
MonomialAut conjugation_by_monomial(const MonomialAlgebraSpec::Ptr& spec, const IntVec& s_exp);

}  // namespace nclift

#endif
