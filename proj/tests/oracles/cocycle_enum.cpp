#include "cocycle_enum.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace nclift::oracle {

namespace {

using Row = std::vector<long long>;

long long norm_mod(long long v, long long n) {
  v %= n;
  return v < 0 ? v + n : v;
}

}  // namespace

long long classes_dividing(const std::vector<long long>& factors, long long k) {
  long long count = 1;
  for (long long d : factors) count *= std::gcd(k, d);
  return count;
}

BruteH2 brute_h2(const GroupTable& gt, long long n, const std::vector<long long>& generator_units,
                 long long max_k) {
  const size_t m = gt.size();
  const size_t m1 = m - 1;
  const size_t vars = m1 * m1;

  // twist units per element, from generator units
  std::vector<long long> unit(m, 1);
  for (size_t e = 0; e < m; ++e) {
    long long u = 1;
    const auto& coords = gt.elems[e].coords();
    const auto& orders = gt.group->orders();
    for (size_t g = 0; g < coords.size(); ++g) {
      long long base = g < generator_units.size() ? norm_mod(generator_units[g], n) : 1;
      long long ee = coords[g] % orders[g];
      for (long long k = 0; k < ee; ++k) u = u * base % n;
    }
    unit[e] = u;
  }

  auto var_of = [&](size_t a, size_t b) -> long long {
    // -1 encodes a normalized (identity-argument) entry
    if (a == 0 || b == 0) return -1;
    return static_cast<long long>((a - 1) * m1 + (b - 1));
  };

  // cocycle identity rows over all triples
  std::vector<Row> rows;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      for (size_t c = 0; c < m; ++c) {
        Row r(vars, 0);
        auto put = [&](long long v, long long coeff) {
          if (v >= 0) r[v] = norm_mod(r[v] + coeff, n);
        };
        put(var_of(b, c), unit[a]);
        put(var_of(gt.add[a][b], c), -1);
        put(var_of(a, gt.add[b][c]), 1);
        put(var_of(a, b), -1);
        bool nonzero = false;
        for (long long v : r) nonzero |= v != 0;
        if (nonzero) rows.push_back(std::move(r));
      }

  // Gauss-Jordan with unit pivots; leftover rows become filters
  std::vector<long long> pivot_row_of(vars, -1);
  std::vector<size_t> pivot_cols, free_cols;
  std::vector<Row> echelon;
  std::vector<Row> filters;
  for (auto& row : rows) {
    // reduce against existing pivots
    for (size_t p = 0; p < pivot_cols.size(); ++p) {
      long long coeff = row[pivot_cols[p]];
      if (coeff == 0) continue;
      const Row& er = echelon[p];
      for (size_t j = 0; j < vars; ++j) row[j] = norm_mod(row[j] - coeff * er[j], n);
    }
    // find a unit pivot
    size_t col = vars;
    for (size_t j = 0; j < vars; ++j)
      if (row[j] != 0 && std::gcd(row[j], n) == 1) {
        col = j;
        break;
      }
    if (col == vars) {
      bool nonzero = false;
      for (long long v : row) nonzero |= v != 0;
      if (nonzero) filters.push_back(row);
      continue;
    }
    // normalize and eliminate everywhere
    long long inv = 1;
    for (long long x = 1; x < n; ++x)
      if (row[col] * x % n == 1) inv = x;
    for (size_t j = 0; j < vars; ++j) row[j] = row[j] * inv % n;
    for (auto& er : echelon) {
      long long coeff = er[col];
      if (coeff == 0) continue;
      for (size_t j = 0; j < vars; ++j) er[j] = norm_mod(er[j] - coeff * row[j], n);
    }
    for (auto& fr : filters) {
      long long coeff = fr[col];
      if (coeff == 0) continue;
      for (size_t j = 0; j < vars; ++j) fr[j] = norm_mod(fr[j] - coeff * row[j], n);
    }
    pivot_row_of[col] = static_cast<long long>(echelon.size());
    pivot_cols.push_back(col);
    echelon.push_back(row);
  }
  for (size_t j = 0; j < vars; ++j)
    if (pivot_row_of[j] < 0) free_cols.push_back(j);

  double branch = 1;
  for (size_t i = 0; i < free_cols.size(); ++i) branch *= static_cast<double>(n);
  if (branch > 8e6) throw std::runtime_error("oracle branch space too large");

  // enumerate assignments of the free columns, back-substitute, filter
  std::vector<std::vector<unsigned char>> z2;
  std::vector<long long> assign(free_cols.size(), 0);
  while (true) {
    std::vector<long long> x(vars, 0);
    for (size_t i = 0; i < free_cols.size(); ++i) x[free_cols[i]] = assign[i];
    for (size_t p = 0; p < pivot_cols.size(); ++p) {
      long long acc = 0;
      const Row& er = echelon[p];
      for (size_t i = 0; i < free_cols.size(); ++i) acc += er[free_cols[i]] * assign[i];
      x[pivot_cols[p]] = norm_mod(-acc, n);
    }
    bool ok = true;
    for (const Row& fr : filters) {
      long long acc = 0;
      for (size_t j = 0; j < vars; ++j) acc += fr[j] * x[j];
      if (norm_mod(acc, n) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<unsigned char> tab(vars);
      for (size_t j = 0; j < vars; ++j) tab[j] = static_cast<unsigned char>(x[j]);
      z2.push_back(std::move(tab));
    }
    size_t i = 0;
    for (; i < assign.size(); ++i) {
      if (++assign[i] < n) break;
      assign[i] = 0;
    }
    if (i == assign.size()) break;
  }

  // coboundaries of all normalized 1-cochains
  std::set<std::vector<unsigned char>> b2;
  std::vector<long long> pi(m1, 0);
  while (true) {
    std::vector<unsigned char> tab(vars, 0);
    for (size_t a = 1; a < m; ++a)
      for (size_t b = 1; b < m; ++b) {
        long long v = unit[a] * pi[b - 1];
        size_t ab = gt.add[a][b];
        if (ab != 0) v -= pi[ab - 1];
        v += pi[a - 1];
        tab[(a - 1) * m1 + (b - 1)] = static_cast<unsigned char>(norm_mod(v, n));
      }
    b2.insert(std::move(tab));
    size_t i = 0;
    for (; i < pi.size(); ++i) {
      if (++pi[i] < n) break;
      pi[i] = 0;
    }
    if (i == pi.size()) break;
  }

  BruteH2 out;
  out.z2_size = static_cast<long long>(z2.size());
  out.b2_size = static_cast<long long>(b2.size());
  if (out.z2_size % out.b2_size != 0)
    throw std::runtime_error("oracle: |B2| does not divide |Z2|");
  out.h2_size = out.z2_size / out.b2_size;
  out.classes_of_order_dividing.assign(static_cast<size_t>(max_k) + 1, 0);
  for (long long k = 1; k <= max_k; ++k) {
    long long cnt = 0;
    for (const auto& z : z2) {
      std::vector<unsigned char> kz(vars);
      for (size_t j = 0; j < vars; ++j) kz[j] = static_cast<unsigned char>(k * z[j] % n);
      if (b2.count(kz)) ++cnt;
    }
    if (cnt % out.b2_size != 0) throw std::runtime_error("oracle: count not divisible");
    out.classes_of_order_dividing[static_cast<size_t>(k)] = cnt / out.b2_size;
  }
  return out;
}

}  // namespace nclift::oracle
