#ifndef NCLIFT_FACTOR_SYSTEM_HPP
#define NCLIFT_FACTOR_SYSTEM_HPP

#include <array>
#include <functional>

#include "nclift/coeff_module.hpp"
#include "nclift/monomial_aut.hpp"

namespace nclift {

/// Transition-unit family of a cleft factor system. Bilinear data covers the
/// infinite grading groups (quantum tori, Heisenberg); tables cover finite
/// groups; a generic callable is accepted for checking only.
struct CleftOmega {
  enum class Kind { bilinear, table, generic };
  Kind kind = Kind::bilinear;

  // bilinear: omega(a, b) = (sum a_i b_j P[i][j], sum a_i b_j V[i][j])
  std::vector<std::vector<Phase>> phase_form;
  std::vector<std::vector<IntVec>> exp_form;

  // table over a finite grading group
  GroupTable::Ptr table_group;
  std::vector<std::vector<MonomialUnit>> table;

  std::function<MonomialUnit(const GroupElement&, const GroupElement&)> fn;

  static CleftOmega trivial(size_t rank, size_t base_gens);
  static CleftOmega bilinear(std::vector<std::vector<Phase>> phases,
                             std::vector<std::vector<IntVec>> exps);
  static CleftOmega from_table(GroupTable::Ptr gt, std::vector<std::vector<MonomialUnit>> tab);
  static CleftOmega generic(std::function<MonomialUnit(const GroupElement&, const GroupElement&)> f,
                            size_t base_gens);

  MonomialUnit value(const GroupElement& a, const GroupElement& b, size_t base_gens) const;
  bool strictly_lower_bilinear() const;
};

/// Factor system with one-dimensional multiplicity spaces: grading group,
/// base algebra, base automorphisms per grading generator and the unit-valued
/// transition family.
struct CleftFactorSystem {
  FgAbelianGroup::Ptr lambda;
  MonomialAlgebraSpec::Ptr base;
  std::vector<MonomialAut> gamma_gens;  // one per lambda generator
  CleftOmega omega;

  MonomialAut gamma_of(const GroupElement& lam) const;
  Element omega_elem(const GroupElement& a, const GroupElement& b) const;
};

struct CheckReport {
  bool pass = true;
  std::string witness;
};

/// Evaluation triples: all generator triples (plus torsion boundary cases)
/// for infinite groups, or the full cube for small finite groups.
std::vector<std::array<GroupElement, 3>> default_triple_set(const FgAbelianGroup::Ptr& lambda,
                                                            Int bound = 512);

/// Cocycle and coaction identities of the unit-valued factor system on the
/// given triples; failures come back with the witness triple.
CheckReport check_cleft_factor_system(const CleftFactorSystem& fs,
                                      const std::vector<std::array<GroupElement, 3>>& triples);

/// Crossed-product style algebra of a strictly normal-ordered cleft factor
/// system, with its grading by the factor-system group.
AlgebraWithGrading build_from_factor_system(const CleftFactorSystem& fs);

/// Conjugacy of two cleft factor systems through a unit family v (values on
/// the grading generators extend multiplicatively; v(0) = 1).
CheckReport check_conjugacy(const std::vector<MonomialUnit>& v_gens, const CleftFactorSystem& fs,
                            const CleftFactorSystem& fs2,
                            const std::vector<std::array<GroupElement, 3>>& triples);

/// Dense matrix over algebra elements, used by the matrix-valued checker.
class ElementMatrix {
 public:
  ElementMatrix() : rows_(0), cols_(0) {}
  ElementMatrix(size_t rows, size_t cols, const MonomialAlgebraSpec::Ptr& spec);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Element& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const Element& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

  ElementMatrix mul(const ElementMatrix& o) const;
  ElementMatrix star() const;  // conjugate transpose
  ElementMatrix kron_identity(size_t n) const;  // this tensor 1_n
  bool equal(const ElementMatrix& o) const;

  static ElementMatrix identity(size_t n, const MonomialAlgebraSpec::Ptr& spec);

 private:
  size_t rows_, cols_;
  std::vector<Element> entries_;
};

/// Matrix-valued factor system over a finite grading group: multiplicity
/// dimensions, generator images of the base homomorphisms gamma, their unit
/// values gamma(1), and the rectangular transition matrices.
struct MatrixFactorSystem {
  GroupTable::Ptr lambda;
  MonomialAlgebraSpec::Ptr base;
  IntVec dims;                                          // per element index
  std::vector<std::vector<ElementMatrix>> gamma_gen;    // [elem][base gen]
  std::vector<ElementMatrix> gamma_unit;                // [elem] = gamma(1)
  std::vector<std::vector<ElementMatrix>> omega;        // [e1][e2]

  ElementMatrix gamma_apply(size_t elem, const Element& b) const;
  ElementMatrix gamma_amplify(size_t elem, const ElementMatrix& y) const;
};

CheckReport check_matrix_factor_system(const MatrixFactorSystem& mfs);

/// Conjugation by a component unit restricted to the center: the dual action
/// on central units induced by any invertible monomial of degree chi.
MonomialAut frohlich(const Grading& g, const GroupElement& chi);

/// Checks that any two monomial choices in the chi component induce the same
/// map on central units.
bool frohlich_is_choice_independent(const Grading& g, const GroupElement& chi);

}  // namespace nclift

#endif
