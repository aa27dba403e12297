#ifndef NCLIFT_TESTS_COCYCLE_ENUM_HPP
#define NCLIFT_TESTS_COCYCLE_ENUM_HPP

#include <vector>

#include "nclift/coeff_module.hpp"

namespace nclift::oracle {

/// Independent brute-force H^2 oracle: enumerates all normalized 2-cocycles
/// over Z/N (as full solution sets of the cocycle identity, spanned from a
/// branching Gauss-Jordan basis) and all coboundaries, then describes the
/// quotient by counting elements of each order. Deliberately avoids the
/// library's Smith-form machinery.
struct BruteH2 {
  long long z2_size = 0;
  long long b2_size = 0;
  long long h2_size = 0;
  /// count of quotient classes with order dividing k, for k = 1..max_k
  std::vector<long long> classes_of_order_dividing;
};

BruteH2 brute_h2(const GroupTable& gt, long long n_modulus,
                 const std::vector<long long>& generator_units, long long max_k);

/// Number of classes of order dividing k in the abelian group with the given
/// invariant factors (for comparison against the oracle).
long long classes_dividing(const std::vector<long long>& factors, long long k);

}  // namespace nclift::oracle

#endif
