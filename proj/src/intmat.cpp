#include "nclift/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace nclift {

Int inverse_mod(Int a, Int n) {
  a = ((a % n) + n) % n;
  Int r0 = n, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw input_error("element not invertible modulo n");
  return ((s0 % n) + n) % n;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw input_error("determinant of non-square matrix");
  size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination over __int128.
  std::vector<__int128> m(n * n);
  for (size_t i = 0; i < n * n; ++i) m[i] = data_[i];
  __int128 prev = 1;
  Int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
    prev = m[k * n + k];
  }
  return detail::checked_narrow(sign * m[n * n - 1], "determinant overflow");
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

namespace {

struct SnfFull {
  IntMatrix u, d, v, u_inv, v_inv;
};

// Gcd-pivot elimination with partial pivoting on the smallest nonzero
// absolute value, tracking both transforms and their inverses.
SnfFull snf_full(const IntMatrix& m) {
  size_t r = m.rows(), c = m.cols();
  SnfFull s{IntMatrix::identity(r), m, IntMatrix::identity(c), IntMatrix::identity(r),
            IntMatrix::identity(c)};
  auto& d = s.d;

  auto swap_rows = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < c; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (size_t j = 0; j < r; ++j) std::swap(s.u.at(a, j), s.u.at(b, j));
    for (size_t i = 0; i < r; ++i) std::swap(s.u_inv.at(i, a), s.u_inv.at(i, b));
  };
  auto swap_cols = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < r; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (size_t i = 0; i < c; ++i) std::swap(s.v.at(i, a), s.v.at(i, b));
    for (size_t j = 0; j < c; ++j) std::swap(s.v_inv.at(a, j), s.v_inv.at(b, j));
  };
  // row[a] -= q * row[b]
  auto add_row = [&](size_t a, size_t b, Int q) {
    if (q == 0) return;
    for (size_t j = 0; j < c; ++j) d.at(a, j) = add_checked(d.at(a, j), mul_checked(-q, d.at(b, j)));
    for (size_t j = 0; j < r; ++j)
      s.u.at(a, j) = add_checked(s.u.at(a, j), mul_checked(-q, s.u.at(b, j)));
    for (size_t i = 0; i < r; ++i)
      s.u_inv.at(i, b) = add_checked(s.u_inv.at(i, b), mul_checked(q, s.u_inv.at(i, a)));
  };
  // col[a] -= q * col[b]
  auto add_col = [&](size_t a, size_t b, Int q) {
    if (q == 0) return;
    for (size_t i = 0; i < r; ++i) d.at(i, a) = add_checked(d.at(i, a), mul_checked(-q, d.at(i, b)));
    for (size_t i = 0; i < c; ++i)
      s.v.at(i, a) = add_checked(s.v.at(i, a), mul_checked(-q, s.v.at(i, b)));
    for (size_t j = 0; j < c; ++j)
      s.v_inv.at(b, j) = add_checked(s.v_inv.at(b, j), mul_checked(q, s.v_inv.at(a, j)));
  };
  auto negate_row = [&](size_t a) {
    for (size_t j = 0; j < c; ++j) d.at(a, j) = -d.at(a, j);
    for (size_t j = 0; j < r; ++j) s.u.at(a, j) = -s.u.at(a, j);
    for (size_t i = 0; i < r; ++i) s.u_inv.at(i, a) = -s.u_inv.at(i, a);
  };

  size_t n = std::min(r, c);
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      // Re-pivot on the smallest nonzero absolute value each pass; this is
      // what keeps the coefficients small.
      size_t pi = t, pj = t;
      Int best = 0;
      for (size_t i = t; i < r && best != 1; ++i)
        for (size_t j = t; j < c; ++j) {
          Int a = std::abs(d.at(i, j));
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
            if (best == 1) break;
          }
        }
      if (best == 0) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool residue = false;
      for (size_t i = t + 1; i < r; ++i) {
        add_row(i, t, d.at(i, t) / d.at(t, t));
        residue |= d.at(i, t) != 0;
      }
      for (size_t j = t + 1; j < c; ++j) {
        add_col(j, t, d.at(t, j) / d.at(t, t));
        residue |= d.at(t, j) != 0;
      }
      if (residue) continue;

      // Enforce the divisibility chain within the trailing block.
      bool fixed = false;
      for (size_t i = t + 1; i < r && !fixed; ++i)
        for (size_t j = t + 1; j < c && !fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            add_row(t, i, -1);  // row_t += row_i
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t < n && d.at(t, t) < 0) negate_row(t);
  }
  return s;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfFull f = snf_full(m);
  return SnfResult{f.u, f.d, f.v};
}

SnfCols snf_cols(const IntMatrix& m) {
  size_t r = m.rows(), c = m.cols();
  SnfCols s{m, IntMatrix::identity(c)};
  auto& d = s.d;

  auto swap_rows = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < c; ++j) std::swap(d.at(a, j), d.at(b, j));
  };
  auto swap_cols = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < r; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (size_t i = 0; i < c; ++i) std::swap(s.v.at(i, a), s.v.at(i, b));
  };
  auto add_row = [&](size_t a, size_t b, Int q) {
    if (q == 0) return;
    for (size_t j = 0; j < c; ++j) d.at(a, j) = add_checked(d.at(a, j), mul_checked(-q, d.at(b, j)));
  };
  auto add_col = [&](size_t a, size_t b, Int q) {
    if (q == 0) return;
    for (size_t i = 0; i < r; ++i) d.at(i, a) = add_checked(d.at(i, a), mul_checked(-q, d.at(i, b)));
    for (size_t i = 0; i < c; ++i)
      s.v.at(i, a) = add_checked(s.v.at(i, a), mul_checked(-q, s.v.at(i, b)));
  };

  size_t n = std::min(r, c);
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      size_t pi = t, pj = t;
      Int best = 0;
      for (size_t i = t; i < r && best != 1; ++i)
        for (size_t j = t; j < c; ++j) {
          Int a = std::abs(d.at(i, j));
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
            if (best == 1) break;
          }
        }
      if (best == 0) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool residue = false;
      for (size_t i = t + 1; i < r; ++i) {
        add_row(i, t, d.at(i, t) / d.at(t, t));
        residue |= d.at(i, t) != 0;
      }
      for (size_t j = t + 1; j < c; ++j) {
        add_col(j, t, d.at(t, j) / d.at(t, t));
        residue |= d.at(t, j) != 0;
      }
      if (residue) continue;
      bool fixed = false;
      for (size_t i = t + 1; i < r && !fixed; ++i)
        for (size_t j = t + 1; j < c && !fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            add_row(t, i, -1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t < n && d.at(t, t) < 0)
      for (size_t j = 0; j < c; ++j) d.at(t, j) = -d.at(t, j);
  }
  return s;
}

ModSolve solve_mod_uniform(const IntMatrix& a, const IntVec& b, Int n) {
  if (b.size() != a.rows()) throw input_error("solve_mod_uniform shape mismatch");
  size_t r = a.rows(), c = a.cols();
  // Smith elimination of `a` with the row operations mirrored on b and the
  // column operations collected in v.
  IntMatrix d = a, v = IntMatrix::identity(c);
  std::vector<__int128> rb(b.begin(), b.end());

  auto swap_rows = [&](size_t x, size_t y) {
    if (x == y) return;
    for (size_t j = 0; j < c; ++j) std::swap(d.at(x, j), d.at(y, j));
    std::swap(rb[x], rb[y]);
  };
  auto swap_cols = [&](size_t x, size_t y) {
    if (x == y) return;
    for (size_t i = 0; i < r; ++i) std::swap(d.at(i, x), d.at(i, y));
    for (size_t i = 0; i < c; ++i) std::swap(v.at(i, x), v.at(i, y));
  };
  auto add_row = [&](size_t x, size_t y, Int q) {
    if (q == 0) return;
    for (size_t j = 0; j < c; ++j) d.at(x, j) = add_checked(d.at(x, j), mul_checked(-q, d.at(y, j)));
    rb[x] -= static_cast<__int128>(q) * rb[y];
  };
  auto add_col = [&](size_t x, size_t y, Int q) {
    if (q == 0) return;
    for (size_t i = 0; i < r; ++i) d.at(i, x) = add_checked(d.at(i, x), mul_checked(-q, d.at(i, y)));
    for (size_t i = 0; i < c; ++i) v.at(i, x) = add_checked(v.at(i, x), mul_checked(-q, v.at(i, y)));
  };

  size_t rank = std::min(r, c);
  for (size_t t = 0; t < rank; ++t) {
    while (true) {
      size_t pi = t, pj = t;
      Int best = 0;
      for (size_t i = t; i < r && best != 1; ++i)
        for (size_t j = t; j < c; ++j) {
          Int x = std::abs(d.at(i, j));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pi = i;
            pj = j;
            if (best == 1) break;
          }
        }
      if (best == 0) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool residue = false;
      for (size_t i = t + 1; i < r; ++i) {
        add_row(i, t, d.at(i, t) / d.at(t, t));
        residue |= d.at(i, t) != 0;
      }
      for (size_t j = t + 1; j < c; ++j) {
        add_col(j, t, d.at(t, j) / d.at(t, t));
        residue |= d.at(t, j) != 0;
      }
      if (!residue) break;
    }
  }

  ModSolve out;
  IntVec y(c, 0);
  auto fail = [&](size_t row, Int diag_entry) {
    std::ostringstream os;
    os << "no solution" << (n ? " mod " : " over Z");
    if (n) os << n;
    os << ": pivot row " << row << " has diagonal " << diag_entry << " against rhs "
       << static_cast<Int>(rb[row]);
    out.certificate = os.str();
    return out;
  };
  for (size_t i = 0; i < r; ++i) {
    Int di = (i < rank) ? d.at(i, i) : 0;
    __int128 bi = rb[i];
    if (n != 0) bi = ((bi % n) + n) % n;
    if (di == 0) {
      if (bi != 0) return fail(i, 0);
      continue;
    }
    if (n == 0) {
      if (bi % di != 0) return fail(i, di);
      y[i] = detail::checked_narrow(bi / di, "solution overflow");
    } else {
      Int g = gcd_ll(di, n);
      if (bi % g != 0) return fail(i, di);
      // solve di * y = bi mod n: reduce by g, invert di/g mod n/g
      Int nn = n / g;
      if (nn == 1) {
        y[i] = 0;
      } else {
        Int dd = ((di / g) % nn + nn) % nn;
        Int bb = static_cast<Int>(((bi / g) % nn + nn) % nn);
        y[i] = mul_checked(bb, inverse_mod(dd, nn)) % nn;
      }
    }
  }
  out.solvable = true;
  out.solution.resize(c);
  IntVec x = v * y;
  for (size_t j = 0; j < c; ++j) {
    Int val = x[j];
    if (n != 0) {
      val %= n;
      if (val < 0) val += n;
    }
    out.solution[j] = val;
  }
  return out;
}

std::vector<IntVec> kernel_mod_uniform(const IntMatrix& a, Int n) {
  SnfCols f = snf_cols(a);
  IntVec diag = f.diag();
  size_t c = a.cols();
  std::vector<IntVec> basis;
  for (size_t j = 0; j < c; ++j) {
    Int dj = j < diag.size() ? diag[j] : 0;
    if (dj == 0) {
      basis.push_back(f.v.column(j));
    } else if (n != 0) {
      Int step = n / gcd_ll(dj, n);
      IntVec col = f.v.column(j);
      if (step != 0) {
        for (auto& x : col) x = mul_checked(x, step);
        basis.push_back(col);
      }
    }
  }
  return basis;
}

IntSolve solve_int(const IntMatrix& a, const IntVec& b) {
  if (b.size() != a.rows()) throw input_error("solve_int shape mismatch");
  SnfFull f = snf_full(a);
  size_t r = a.rows(), c = a.cols();
  IntVec cb = f.u * b;
  IntVec y(c, 0);
  IntSolve out;
  size_t n = std::min(r, c);
  for (size_t i = 0; i < r; ++i) {
    Int di = i < n ? f.d.at(i, i) : 0;
    if (di == 0) {
      if (cb[i] != 0) return out;  // inconsistent row
    } else {
      if (cb[i] % di != 0) return out;
      y[i] = cb[i] / di;
    }
  }
  out.solvable = true;
  out.particular = f.v * y;
  for (size_t j = 0; j < c; ++j) {
    bool free_coord = j >= n || f.d.at(j, j) == 0;
    if (free_coord) out.kernel.push_back(f.v.column(j));
  }
  return out;
}

std::vector<IntVec> int_kernel(const IntMatrix& a) {
  return solve_int(a, IntVec(a.rows(), 0)).kernel;
}

ModSolve solve_mod(const IntMatrix& a, const IntVec& b, Int n) {
  if (n <= 0) throw input_error("modulus must be positive");
  if (b.size() != a.rows()) throw input_error("solve_mod shape mismatch");
  size_t r = a.rows(), c = a.cols();
  IntMatrix g = a.hstack(IntMatrix::diagonal(IntVec(r, n)));
  ModSolve out;
  IntSolve s = solve_int(g, b);
  if (!s.solvable) {
    SnfResult f = snf(g);
    IntVec cb = f.u * b;
    std::ostringstream os;
    os << "no solution mod " << n << ": snf diag = [";
    IntVec dg = f.diag();
    for (size_t i = 0; i < dg.size(); ++i) os << (i ? "," : "") << dg[i];
    os << "], transformed rhs = [";
    for (size_t i = 0; i < cb.size(); ++i) os << (i ? "," : "") << cb[i];
    os << "]";
    out.certificate = os.str();
    return out;
  }
  out.solvable = true;
  out.solution.resize(c);
  for (size_t j = 0; j < c; ++j) {
    Int x = s.particular[j] % n;
    if (x < 0) x += n;
    out.solution[j] = x;
  }
  return out;
}

bool lattice_contains(const IntMatrix& basis, const IntVec& v) {
  return solve_int(basis, v).solvable;
}

QuotientStructure quotient_structure(const IntMatrix& l_basis, const IntMatrix& s_gens) {
  if (l_basis.rows() != s_gens.rows()) throw input_error("quotient ambient mismatch");
  size_t t = l_basis.rows();

  // Reduce the spanning set of L to an honest basis.
  SnfFull fl = snf_full(l_basis);
  std::vector<IntVec> bcols;
  size_t nl = std::min(l_basis.rows(), l_basis.cols());
  for (size_t i = 0; i < nl; ++i) {
    if (fl.d.at(i, i) == 0) continue;
    IntVec col(t, 0);
    for (size_t k = 0; k < t; ++k) col[k] = mul_checked(fl.u_inv.at(k, i), fl.d.at(i, i));
    bcols.push_back(col);
  }
  IntMatrix basis = IntMatrix::from_columns(t, bcols);
  size_t rank = bcols.size();

  // Express the S generators in that basis, factoring the basis only once.
  SnfFull fb = snf_full(basis);
  size_t nb = std::min(basis.rows(), basis.cols());
  std::vector<IntVec> ycols;
  for (size_t j = 0; j < s_gens.cols(); ++j) {
    IntVec cb = fb.u * s_gens.column(j);
    IntVec yv(basis.cols(), 0);
    for (size_t i = 0; i < basis.rows(); ++i) {
      Int di = i < nb ? fb.d.at(i, i) : 0;
      if (di == 0) {
        if (cb[i] != 0) throw input_error("quotient: generators not inside the lattice");
      } else {
        if (cb[i] % di != 0) throw input_error("quotient: generators not inside the lattice");
        yv[i] = cb[i] / di;
      }
    }
    ycols.push_back(fb.v * yv);
  }
  IntMatrix y = IntMatrix::from_columns(rank, ycols);

  SnfFull fy = snf_full(y);
  // New basis columns: basis * u_inv; relation i has order d_i (0 = free).
  QuotientStructure out;
  for (size_t i = 0; i < rank; ++i) {
    Int order = 0;
    if (i < std::min(y.rows(), y.cols())) order = fy.d.at(i, i);
    if (order == 1) continue;
    IntVec gen(t, 0);
    for (size_t k = 0; k < t; ++k) {
      __int128 acc = 0;
      for (size_t l = 0; l < rank; ++l)
        acc += static_cast<__int128>(basis.at(k, l)) * fy.u_inv.at(l, i);
      gen[k] = detail::checked_narrow(acc, "quotient generator overflow");
    }
    out.factors.push_back(order);
    out.generators.push_back(gen);
  }
  // Canonical order: torsion factors ascending (divisibility chain from SNF
  // already gives d_1 | d_2 | ...), free summands last.
  std::vector<size_t> idx(out.factors.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](size_t ia, size_t ib) {
    Int a = out.factors[ia], b = out.factors[ib];
    if ((a == 0) != (b == 0)) return b == 0;
    return a < b;
  });
  QuotientStructure sorted;
  for (size_t i : idx) {
    sorted.factors.push_back(out.factors[i]);
    sorted.generators.push_back(out.generators[i]);
  }
  return sorted;
}

}  // namespace nclift
