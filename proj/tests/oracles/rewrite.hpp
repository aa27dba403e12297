#ifndef NCLIFT_TESTS_REWRITE_HPP
#define NCLIFT_TESTS_REWRITE_HPP

#include "nclift/monomial.hpp"

namespace nclift::oracle {

/// Step-by-step normal ordering of a word of generator letters by elementary
/// adjacent swaps u_k^s u_l^t -> e^{2 pi i s t theta_kl} u^{s t d_kl} u_l^t
/// u_k^s. Independent of the library's closed-form product.
struct RewriteResult {
  Phase phase;
  IntVec exponent;
};

/// Letters are (generator index, +1/-1).
RewriteResult rewrite_word(const MonomialAlgebraSpec& spec,
                           const std::vector<std::pair<size_t, int>>& word);

/// The word of a normal-form monomial exponent.
std::vector<std::pair<size_t, int>> word_of_exponent(const IntVec& exp);

}  // namespace nclift::oracle

#endif
