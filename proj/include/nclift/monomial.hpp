#ifndef NCLIFT_MONOMIAL_HPP
#define NCLIFT_MONOMIAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nclift/abgroup.hpp"
#include "nclift/cyclotomic.hpp"
#include "nclift/intmat.hpp"
#include "nclift/phase.hpp"

namespace nclift {

/// Twisted monomial *-algebra over an exponent group E = Z^f + torsion:
/// unitary generators u_1..u_n subject to
///   u_k u_l = e^{2 pi i theta_kl} u^{d_kl} u_l u_k   (k > l)
/// with every generator occurring in a correction vector d_kl central.
/// Monomials carry the normal order u_1^{a_1} ... u_n^{a_n}; products reduce
/// through the closed form
///   u^a u^b = e^{2 pi i c(a,b)} u^{a + b + corr(a,b)},
///   c(a,b) = sum_{k>l} a_k b_l theta_kl, corr(a,b) = sum_{k>l} a_k b_l d_kl.
class MonomialAlgebraSpec : public std::enable_shared_from_this<MonomialAlgebraSpec> {
 public:
  using Ptr = std::shared_ptr<const MonomialAlgebraSpec>;

  struct Correction {
    size_t k, l;  // k > l
    IntVec vector;
  };

  static Ptr make(IntVec generator_orders, std::vector<std::vector<Phase>> theta,
                  std::vector<Correction> corrections, Int conductor);

  size_t gens() const { return orders_.size(); }
  const IntVec& generator_orders() const { return orders_; }
  Int conductor() const { return conductor_; }
  const std::vector<std::vector<Phase>>& theta() const { return theta_; }
  const std::vector<Correction>& corrections() const { return corrections_; }

  /// The exponent group E as an abstract group (coordinates = generators).
  const FgAbelianGroup::Ptr& exponent_group() const { return egroup_; }

  IntVec reduce_exponent(IntVec e) const;
  Phase comm_phase(const IntVec& a, const IntVec& b) const;
  IntVec comm_correction(const IntVec& a, const IntVec& b) const;

  /// Inverse of the unitary monomial u^a as (phase, exponent).
  std::pair<Phase, IntVec> monomial_inverse(const IntVec& a) const;

  bool exponent_is_central(const IntVec& a) const;
  /// Basis (columns) of the lattice of central exponents in Z^gens.
  IntMatrix central_exponent_kernel() const;

  bool same_structure(const MonomialAlgebraSpec& other) const;

 private:
  MonomialAlgebraSpec() = default;

  IntVec orders_;
  std::vector<std::vector<Phase>> theta_;
  std::vector<Correction> corrections_;
  Int conductor_ = 1;
  FgAbelianGroup::Ptr egroup_;
};

/// Finitely supported element: exact cyclotomic coefficients on normal-form
/// monomials; zero coefficients are never stored.
class Element {
 public:
  Element() = default;
  explicit Element(MonomialAlgebraSpec::Ptr spec) : spec_(std::move(spec)) {}

  static Element zero(MonomialAlgebraSpec::Ptr spec) { return Element(std::move(spec)); }
  static Element unit(MonomialAlgebraSpec::Ptr spec);
  static Element monomial(MonomialAlgebraSpec::Ptr spec, CycScalar coeff, IntVec exp);
  static Element monomial(MonomialAlgebraSpec::Ptr spec, const Phase& phase, IntVec exp);

  const MonomialAlgebraSpec::Ptr& spec() const { return spec_; }
  const std::map<IntVec, CycScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  Element operator-() const;
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const CycScalar& c, const Element& x);
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Antilinear antimultiplicative involution with star(u^a) = (u^a)^{-1}.
  Element star() const;

  std::string str() const;

 private:
  void insert_term(const IntVec& exp, const CycScalar& c);

  MonomialAlgebraSpec::Ptr spec_;
  std::map<IntVec, CycScalar> terms_;
};

/// A monomial times a root of unity; the unit shape all gauge data uses.
struct MonomialUnit {
  Phase phase;
  IntVec exp;
};

Element unit_to_element(const MonomialAlgebraSpec::Ptr& spec, const MonomialUnit& u);
/// Recognizes c * u^a with c a root of unity; empty otherwise.
std::optional<MonomialUnit> as_monomial_unit(const Element& x);
/// Root-of-unity detection for an exact scalar.
std::optional<Phase> phase_of_scalar(const CycScalar& c);

/// Grading of the algebra by a f.g. abelian group along an exponent-linear
/// degree map. Multiplication shifts degrees by phi(corr(a, b)); the grading
/// is multiplicative precisely when phi kills every correction vector.
struct Grading {
  MonomialAlgebraSpec::Ptr spec;
  FgAbelianGroup::Ptr lambda;
  IntMatrix phi;  // lambda.rank x spec.gens

  Grading(MonomialAlgebraSpec::Ptr s, FgAbelianGroup::Ptr l, IntMatrix m);

  GroupElement degree_of(const IntVec& exp) const;
  bool kills_corrections() const;
  /// Some exponent of degree lam, if any.
  std::optional<IntVec> exponent_in_degree(const GroupElement& lam) const;
};

Element graded_component(const Element& x, const Grading& g, const GroupElement& lam);

/// For each window degree: the component must contain an invertible monomial
/// and A_lam * A_{-lam} must contain 1.
bool strong_grading_check(const Grading& g, const std::vector<GroupElement>& window);

/// Quantum n-torus: free exponents, gauge grading by Z^n with phi = id.
struct AlgebraWithGrading {
  MonomialAlgebraSpec::Ptr spec;
  Grading grading;
};
AlgebraWithGrading qtorus(const std::vector<std::vector<Phase>>& theta, size_t n);

/// Heisenberg group algebra: u, v, w with uv = w v u; Z^3 labeling grading
/// and the Z^2 gauge grading that forgets w.
struct HeisenbergModel {
  MonomialAlgebraSpec::Ptr spec;
  Grading grading_z3;
  Grading grading_z2;
};
HeisenbergModel heisenberg();

}  // namespace nclift

#endif
