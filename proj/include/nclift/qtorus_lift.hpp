#ifndef NCLIFT_QTORUS_LIFT_HPP
#define NCLIFT_QTORUS_LIFT_HPP

#include "nclift/monomial.hpp"

namespace nclift {

/// Solutions theta' of M theta' M^T = theta modulo integer matrices, listed
/// as pairwise inequivalent representatives modulo skew integer matrices.
struct QtorusLiftSolution {
  std::vector<std::vector<std::vector<Phase>>> representatives;
  Int count = 0;        // enumerated class count
  Int index_check = 0;  // independent lattice-index route
};

QtorusLiftSolution qtorus_lift_solve(const std::vector<std::vector<Phase>>& theta,
                                     const IntMatrix& m);

/// Adjugate matrix (det(M) * M^{-1}) by cofactor expansion.
IntMatrix adjugate(const IntMatrix& m);

}  // namespace nclift

#endif
