#ifndef NCLIFT_LIFTING_HPP
#define NCLIFT_LIFTING_HPP

#include "nclift/cohomology.hpp"
#include "nclift/factor_system.hpp"

namespace nclift {

/// Exponent embedding iota(u^a) = e^{2 pi i xi(a)} u^{T a} with a quadratic
/// phase form xi; the quadratic part absorbs normal-ordering coboundaries
/// between the two presentations.
struct Embedding {
  IntMatrix matrix;                       // E_A -> E_Ahat on exponents
  std::vector<std::vector<Phase>> quad;   // upper triangular; xi(a) = sum quad[i][j] a_i a_j

  static Embedding plain(IntMatrix m);
  Phase xi(const IntVec& a) const;
  std::pair<Phase, IntVec> apply_exponent(const IntVec& a) const;
  Element apply(const Element& x, const MonomialAlgebraSpec::Ptr& target) const;
};

/// Base data of the lifting problem: the G*-graded algebra with its
/// degree-zero subalgebra as fixed algebra, and the dualized extension.
struct LiftProblem {
  MonomialAlgebraSpec::Ptr base_alg;  // A
  Grading base_grading;               // by G*
  ExtensionSeq ext;                   // 0 -> G* -> Ghat* -> Z* -> 0
};

/// Multiplication twist on Z*-component pairs, valued in G-fixed central
/// monomial units of the base algebra (exponents written in E_Ahat).
struct TwistCochain {
  enum class Kind { bilinear, table };
  Kind kind = Kind::bilinear;

  std::vector<std::vector<Phase>> phase_form;
  std::vector<std::vector<IntVec>> exp_form;

  GroupTable::Ptr table_group;
  std::vector<std::vector<MonomialUnit>> table;

  static TwistCochain trivial_for(const FgAbelianGroup::Ptr& zstar, size_t ahat_gens,
                                  Int table_bound = 4096);
  MonomialUnit value(const GroupElement& a, const GroupElement& b, size_t ahat_gens) const;
  TwistCochain plus(const TwistCochain& o) const;
  TwistCochain minus(const TwistCochain& o) const;
  bool is_trivial() const;
};

/// A candidate lift: the Ghat*-labeled algebra, the embedding of the base,
/// and the multiplication twist relative to the plain monomial product.
struct GStructure {
  LiftProblem problem;
  MonomialAlgebraSpec::Ptr ahat;
  Grading ghat_grading;  // by Ghat*
  Embedding embedding;
  TwistCochain twist;

  Grading zstar_grading() const;
  GroupElement zstar_degree(const IntVec& exp) const;
  /// Twisted product of the structure.
  Element multiply(const Element& x, const Element& y) const;
  /// Designated invertible monomial of the chi component.
  std::optional<IntVec> component_unit(const GroupElement& chi) const;
};

bool restriction_check(const GStructure& s);

/// Verifies the structural invariants (gradings compatible, Z*-grading
/// multiplicative, twist normalized, twisted product associative on
/// generating monomials) and throws input_error on violation.
void validate_structure(const GStructure& s);

/// C(Ghat) models: the group algebra of the dualized extension over a base
/// algebra, with its restriction to the G* part.
struct ToyStructure {
  LiftProblem problem;
  GStructure structure;
};
ToyStructure toy_structure(const MonomialAlgebraSpec::Ptr& b, const ExtensionSeq& ext);

/// The Heisenberg T^3-structure over (C(T), T, rho).
ToyStructure heisenberg_structure();

/// Quantum-torus covering structures: Ahat = qtorus(theta') relabeled along
/// (M^T)^{-1}, over A = qtorus(theta).
ToyStructure qtorus_lift_structure(const std::vector<std::vector<Phase>>& theta,
                                   const IntMatrix& m,
                                   const std::vector<std::vector<Phase>>& theta_prime);

/// Central-unit module U(Z(A)^G) of a structure, with its Frohlich action,
/// as a coefficient module over Z* (throws unsupported_error when the action
/// does not preserve the phase/exponent decomposition).
struct UnitModule {
  CoeffModule::Ptr module;       // summand 0: divisible phases; summand 1: exponent part
  IntMatrix exponent_basis;      // columns: E_Ahat exponents of the lattice summand
  std::string description;
};
UnitModule fixed_central_units(const GStructure& s);
/// Full central units U(Z(A)) (gauge coefficients; no G-fixedness).
UnitModule central_units(const GStructure& s);

GStructure twist_structure(const GStructure& s, const TwistCochain& omega);

struct EquivalenceResult {
  bool equivalent = false;
  std::string detail;                 // class certificate or primitive shape
  std::optional<Cochain> primitive;   // finite Z* path
};
EquivalenceResult equivalence_test(const GStructure& s1, const GStructure& s2);

struct ClassificationReport {
  UnitModule coefficients;
  CohomologyGroup h2;
  std::vector<TwistCochain> representative_twists;
};
ClassificationReport classify(const GStructure& s);

/// Gauge group Z^1_Delta(Z*, U(Z(A))) and concrete gauge action.
struct GaugeElement {
  std::vector<MonomialUnit> gen_values;  // one per Z* generator, in E_Ahat
};
struct GaugeReport {
  UnitModule coefficients;
  CohomologyGroup z1;        // structural descriptor (trivial-action path)
  std::string note;
};
GaugeReport gauge_group(const GStructure& s);
/// c(chi) for arbitrary chi by the crossed extension of the generator values.
Element gauge_value(const GStructure& s, const GaugeElement& c, const GroupElement& chi);
Element apply_gauge(const GStructure& s, const GaugeElement& c, const Element& x);
/// Verifies multiplicativity, star and grading preservation on generators.
bool gauge_is_automorphism(const GStructure& s, const GaugeElement& c);

bool freeness_check(const GStructure& s);

struct PicardRecord {
  GroupElement chi;
  bool cleft = false;
  bool frohlich_trivial = false;
};
struct PicardReport {
  std::vector<PicardRecord> records;
  bool trivial = false;  // all components cleft with identity Frohlich maps
};
PicardReport picard_data(const GStructure& s);

}  // namespace nclift

#endif
