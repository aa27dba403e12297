#include "nclift/qtorus_lift.hpp"

namespace nclift {

namespace {

IntMatrix minor_of(const IntMatrix& m, size_t row, size_t col) {
  IntMatrix out(m.rows() - 1, m.cols() - 1);
  for (size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out.at(oi, oj) = m.at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

}  // namespace

IntMatrix adjugate(const IntMatrix& m) {
  size_t n = m.rows();
  if (n != m.cols()) throw input_error("adjugate of non-square matrix");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Int c = minor_of(m, j, i).det();
      adj.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  return adj;
}

QtorusLiftSolution qtorus_lift_solve(const std::vector<std::vector<Phase>>& theta,
                                     const IntMatrix& m) {
  size_t n = m.rows();
  if (m.cols() != n) throw input_error("covering matrix must be square");
  Int det = m.det();
  if (det == 0) throw input_error("covering matrix must be invertible");
  if (theta.size() != n) throw input_error("theta size mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (theta[i].size() != n) throw input_error("theta size mismatch");
    for (size_t j = 0; j < n; ++j)
      if (!(theta[i][j] + theta[j][i]).is_zero() || (i == j && !theta[i][i].is_zero()))
        throw input_error("theta must be skew");
  }

  // skew coordinates: pairs (i < j)
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  size_t sk = pairs.size();

  IntMatrix adj = adjugate(m);
  IntMatrix adj_t = adj.transpose();
  Int d2 = mul_checked(det, det);

  // coefficient of the skew-basis entry t in adj K_t adj^T at position c
  auto map_coeff = [&](size_t c, size_t t) {
    auto [ci, cj] = pairs[c];
    auto [ti, tj] = pairs[t];
    Int f = mul_checked(adj.at(ci, ti), adj_t.at(tj, cj));
    f = add_checked(f, -mul_checked(adj.at(ci, tj), adj_t.at(ti, cj)));
    return f;
  };

  // K -> adj K adj^T as an integer matrix on skew coordinates (denominator d2)
  IntMatrix amap(sk, sk);
  for (size_t c = 0; c < sk; ++c)
    for (size_t t = 0; t < sk; ++t) amap.at(c, t) = map_coeff(c, t);

  // Lambda = {K : amap K = 0 mod det^2} indexes equivalent integer choices
  std::vector<IntVec> lam = kernel_mod_uniform(amap, d2);
  QuotientStructure q =
      quotient_structure(IntMatrix::identity(sk), IntMatrix::from_columns(sk, lam));
  for (Int f : q.factors)
    if (f == 0) throw input_error("unexpected infinite solution class family");

  QtorusLiftSolution out;
  out.count = 1;
  for (Int f : q.factors) out.count = mul_checked(out.count, f);

  // independent index route through the Smith form of [amap | det^2 I]
  {
    IntMatrix stacked = amap.hstack(IntMatrix::diagonal(IntVec(sk, d2)));
    Int covol = 1;
    for (Int v : snf(stacked).diag()) covol = mul_checked(covol, v);
    Int numer = 1;
    for (size_t i = 0; i < sk; ++i) numer = mul_checked(numer, d2);
    out.index_check = numer / covol;
  }

  // theta' = adj (theta + K) adj^T / det^2, reduced into [0, 1)
  std::vector<Rat> base(sk);
  for (size_t c = 0; c < sk; ++c) {
    Rat acc(0);
    auto [ci, cj] = pairs[c];
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        const Phase& t = theta[a][b];
        if (t.is_zero()) continue;
        acc += Rat(mul_checked(adj.at(ci, a), adj_t.at(b, cj))) * t.value();
      }
    base[c] = acc / Rat(d2);
  }

  IntVec counters(q.factors.size(), 0);
  while (true) {
    IntVec k(sk, 0);
    for (size_t i = 0; i < counters.size(); ++i)
      for (size_t t = 0; t < sk; ++t)
        k[t] = add_checked(k[t], mul_checked(counters[i], q.generators[i][t]));
    std::vector<std::vector<Phase>> rep(n, std::vector<Phase>(n));
    for (size_t c = 0; c < sk; ++c) {
      Rat acc = base[c];
      for (size_t t = 0; t < sk; ++t)
        if (k[t] != 0) acc += Rat(mul_checked(map_coeff(c, t), k[t])) / Rat(d2);
      rep[pairs[c].first][pairs[c].second] = Phase(acc);
      rep[pairs[c].second][pairs[c].first] = -Phase(acc);
    }
    out.representatives.push_back(rep);
    if (counters.empty()) break;
    size_t i = 0;
    for (; i < counters.size(); ++i) {
      if (++counters[i] < q.factors[i]) break;
      counters[i] = 0;
    }
    if (i == counters.size()) break;
    if (out.representatives.size() > 100000) throw size_error("solution family too large");
  }

  // exact congruence M theta' M^T = theta mod Z on every representative
  for (const auto& rep : out.representatives) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Rat acc(0);
        for (size_t a = 0; a < n; ++a)
          for (size_t b = 0; b < n; ++b) {
            if (rep[a][b].is_zero()) continue;
            acc += Rat(mul_checked(m.at(i, a), m.at(j, b))) * rep[a][b].value();
          }
        if (!(Phase(acc) == theta[i][j]))
          throw input_error("internal: representative fails the congruence");
      }
  }
  if (out.count != static_cast<Int>(out.representatives.size()))
    throw input_error("internal: class count mismatch");
  return out;
}

}  // namespace nclift
