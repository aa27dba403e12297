#ifndef NCLIFT_OBSTRUCTION_HPP
#define NCLIFT_OBSTRUCTION_HPP

#include "nclift/lifting.hpp"

namespace nclift {

/// Group-side data of a finite dualized extension: the structure groups
/// themselves as duals of the grading groups, with q and iota dual to the
/// extension maps.
struct FiniteGroupSide {
  FgAbelianGroup::Ptr g, ghat, z;  // duals of G*, Ghat*, Z*
  GroupTable::Ptr ghat_table;
  GroupTable::Ptr g_table;
  GroupTable::Ptr z_table;
  GroupHom q;     // ghat -> g
  GroupHom iota;  // z -> ghat
};

FiniteGroupSide group_side(const ExtensionSeq& ext, Int bound = 4096);

/// Dual homomorphism between finite groups.
GroupHom dual_hom(const GroupHom& f, const FgAbelianGroup::Ptr& dual_source,
                  const FgAbelianGroup::Ptr& dual_target);

/// Family v_ghat(chi) of monomial units of the embedded base, one table row
/// per element of Ghat; the identity row must be trivial.
struct VFamily {
  std::vector<std::vector<MonomialUnit>> v;  // [ghat index][zstar index]
};

/// Builds the family from values on a section (one representative per G
/// element) by the equivariance rule v_{z ghat}(chi) = chi(z) v_ghat(chi).
VFamily extend_v_family(const GStructure& s, const FiniteGroupSide& gs,
                        const std::vector<std::pair<GroupElement, std::vector<MonomialUnit>>>&
                            section_values);

/// Equivariance and the composition identity for every pair; equivalent to
/// the assembled action being a group homomorphism.
bool v_family_check(const VFamily& vf, const GStructure& s, const FiniteGroupSide& gs);

/// The lifted automorphism attached to one group element and the family.
MonomialAut lift_automorphism(const GStructure& s, const FiniteGroupSide& gs, const VFamily& vf,
                              const GroupElement& ghat_elem);

/// Gauge elements on a finite Z*: a full table of values.
struct GaugeTable {
  std::vector<MonomialUnit> values;  // per Z* element index
};

struct ObstructionReport {
  bool cocycle_verified = false;
  bool trivial = false;
  std::string certificate;
  // the obstruction values delta(g, g') as gauge tables
  std::vector<std::vector<GaugeTable>> delta;
  // when trivial: the trivializing cochain and the corrected family
  std::vector<GaugeTable> phi;
  std::optional<VFamily> corrected;
};

ObstructionReport delta_obstruction(const GStructure& s, const FiniteGroupSide& gs,
                                    const VFamily& vf);

}  // namespace nclift

#endif
