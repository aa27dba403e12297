#include "rewrite.hpp"

#include <list>

namespace nclift::oracle {

std::vector<std::pair<size_t, int>> word_of_exponent(const IntVec& exp) {
  std::vector<std::pair<size_t, int>> word;
  for (size_t j = 0; j < exp.size(); ++j) {
    int sign = exp[j] >= 0 ? 1 : -1;
    for (Int k = 0; k < std::abs(exp[j]); ++k) word.emplace_back(j, sign);
  }
  return word;
}

RewriteResult rewrite_word(const MonomialAlgebraSpec& spec,
                           const std::vector<std::pair<size_t, int>>& input) {
  std::list<std::pair<size_t, int>> word(input.begin(), input.end());
  Phase phase;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    auto it = word.begin();
    while (it != word.end()) {
      auto next = std::next(it);
      if (next == word.end()) break;
      auto [k, s] = *it;
      auto [l, t] = *next;
      if (k > l) {
        // u_k^s u_l^t = e^{2 pi i s t theta_kl} u^{s t d_kl} u_l^t u_k^s
        phase += (s * t) * spec.theta()[k][l];
        std::swap(*it, *next);
        for (const auto& c : spec.corrections()) {
          if (c.k != k || c.l != l) continue;
          for (size_t j = 0; j < spec.gens(); ++j) {
            Int e = s * t * c.vector[j];
            int sign = e >= 0 ? 1 : -1;
            for (Int q = 0; q < std::abs(e); ++q) word.emplace_front(j, sign);
          }
        }
        swapped = true;
        break;  // restart after structural change
      }
      ++it;
    }
  }
  IntVec exp(spec.gens(), 0);
  for (auto [g, s] : word) exp[g] += s;
  return RewriteResult{phase, spec.reduce_exponent(std::move(exp))};
}

}  // namespace nclift::oracle
