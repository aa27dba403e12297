#ifndef NCLIFT_COHOMOLOGY_HPP
#define NCLIFT_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "nclift/cochain.hpp"

namespace nclift {

/// One generator of a structural H^2 class: the bilinear cocycle
/// omega(a, b) = (a_{ai} * b_{aj}) * value placed in the given module
/// coordinate. `order` is the order of the class (0 for a free or divisible
/// parameter family).
struct BilinearRep {
  size_t ai = 0, aj = 0;
  size_t summand = 0, coord = 0;
  Int order = 0;
  Int zval = 0;    // presented coordinate generator value
  Phase pval;      // divisible generator value (for finite order)
  bool family = false;  // divisible or free parameter family
};

/// Descriptor of a computed (co)homology group together with representative
/// cocycles where the computation was table-based.
struct CohomologyGroup {
  int degree = 0;
  IntVec torsion;             // invariant factors > 1
  size_t free_rank = 0;       // Z summands
  size_t divisible_rank = 0;  // Q/Z summands
  std::vector<Cochain> reps;  // table representatives (finite acting group)
  std::vector<BilinearRep> bilinear_reps;  // structural representatives
  std::string note;

  bool is_trivial() const { return torsion.empty() && free_rank == 0 && divisible_rank == 0; }
  Int torsion_order() const {
    Int n = 1;
    for (Int d : torsion) n = mul_checked(n, d);
    return n;
  }
  std::string str() const;
};

/// H^n by exact linear algebra on the normalized bar complex; degrees 1..3.
CohomologyGroup cohomology_group(const GroupTable::Ptr& gt, const CoeffModule::Ptr& mod, int n);

/// Structural H^2 = Hom(wedge^2 A, M) for a trivial action; valid for any
/// f.g. A when every summand is divisible, and for free A in general.
CohomologyGroup h2_structural(const FgAbelianGroup::Ptr& a, const CoeffModule::Ptr& mod);

/// Ext(A, Q/Z) = 0 for divisible coefficients; the note carries the
/// divisibility certificate.
CohomologyGroup ext_group(const FgAbelianGroup::Ptr& a);

/// Crossed homomorphisms: Z^1, B^1 and H^1 for a finite acting group.
struct Degree1Groups {
  CohomologyGroup z1, b1, h1;
};
Degree1Groups crossed_homs(const GroupTable::Ptr& gt, const CoeffModule::Ptr& mod);

/// Z^1 = Hom(A, M) for a trivial action on any f.g. A (structural path).
CohomologyGroup crossed_homs_structural(const FgAbelianGroup::Ptr& a, const CoeffModule::Ptr& mod);

/// Solves d(pre) = c for a cocycle c of degree 1..3; when unsolvable, the
/// certificate records the inconsistent system in Smith form.
struct CoboundaryResult {
  bool is_coboundary = false;
  std::optional<Cochain> primitive;
  std::string certificate;
};
CoboundaryResult is_coboundary(const Cochain& c);

/// Cocycle test valid for all degrees 0..3 (degree 3 checked through the
/// degree-4 bar identity without materializing a degree-4 cochain).
bool is_cocycle(const Cochain& c);

}  // namespace nclift

#endif
