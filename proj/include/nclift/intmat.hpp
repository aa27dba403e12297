#ifndef NCLIFT_INTMAT_HPP
#define NCLIFT_INTMAT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "nclift/rat.hpp"

namespace nclift {

using IntVec = std::vector<Int>;

/// Inverse of a modulo n; throws if gcd(a, n) != 1.
Int inverse_mod(Int a, Int n);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw input_error("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix diagonal(const IntVec& d) {
    IntMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
  }
  static IntMatrix from_columns(size_t rows, const std::vector<IntVec>& cols) {
    IntMatrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw input_error("column length mismatch");
      for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& at(size_t i, size_t j) {
    check(i, j);
    return data_[i * cols_ + j];
  }
  Int at(size_t i, size_t j) const {
    check(i, j);
    return data_[i * cols_ + j];
  }

  IntVec column(size_t j) const {
    IntVec c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }
  IntVec row(size_t i) const {
    IntVec r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw input_error("matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        Int v = a.at(i, k);
        if (v == 0) continue;
        for (size_t j = 0; j < b.cols_; ++j)
          c.at(i, j) = add_checked(c.at(i, j), mul_checked(v, b.at(k, j)));
      }
    return c;
  }
  friend IntVec operator*(const IntMatrix& a, const IntVec& x) {
    if (a.cols_ != x.size()) throw input_error("matrix-vector shape mismatch");
    IntVec y(a.rows_, 0);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < a.cols_; ++j)
        y[i] = add_checked(y[i], mul_checked(a.at(i, j), x[j]));
    return y;
  }
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  IntMatrix hstack(const IntMatrix& other) const {
    if (other.rows_ != rows_) throw input_error("hstack row mismatch");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
      for (size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
  }

  /// Determinant by Bareiss fraction-free elimination.
  Int det() const;

  std::string str() const;

 private:
  void check(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_) throw input_error("matrix index out of range");
  }

  size_t rows_, cols_;
  std::vector<Int> data_;
};

/// U * M * V = D with U, V unimodular and D = diag(d_1 | d_2 | ...), d_i >= 0.
struct SnfResult {
  IntMatrix u, d, v;
  IntVec diag() const {
    IntVec out;
    size_t n = std::min(d.rows(), d.cols());
    for (size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
  }
};

SnfResult snf(const IntMatrix& m);

/// Smith elimination tracking only the column transform; enough to describe
/// kernels, much lighter than full snf on matrices with many rows.
struct SnfCols {
  IntMatrix d, v;
  IntVec diag() const {
    IntVec out;
    size_t n = std::min(d.rows(), d.cols());
    for (size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
  }
};

SnfCols snf_cols(const IntMatrix& m);

/// Basis of {x : A x = 0 mod n}, with n = 0 meaning equality over Z. All rows
/// share the single modulus n.
std::vector<IntVec> kernel_mod_uniform(const IntMatrix& a, Int n);

/// Particular solution and kernel lattice basis of A*x = b over the integers.
struct IntSolve {
  bool solvable = false;
  IntVec particular;
  std::vector<IntVec> kernel;  // basis of {x : A x = 0}
};

IntSolve solve_int(const IntMatrix& a, const IntVec& b);

/// Kernel lattice basis of A*x = 0 over the integers.
std::vector<IntVec> int_kernel(const IntMatrix& a);

/// One solution of A*x = b over Z/N, or nothing. `certificate`, when present
/// on failure, carries the SNF diagnostics of the inconsistent system.
struct ModSolve {
  bool solvable = false;
  IntVec solution;
  std::string certificate;
};

ModSolve solve_mod(const IntMatrix& a, const IntVec& b, Int n);

/// One solution of A x = b mod n (n = 0: over Z) without materializing the
/// row transform; suitable for systems with many rows.
ModSolve solve_mod_uniform(const IntMatrix& a, const IntVec& b, Int n);

/// True iff v lies in the lattice spanned by the columns of basis.
bool lattice_contains(const IntMatrix& basis, const IntVec& v);

/// Structure of the quotient L / S for sublattices S <= L <= Z^t, where the
/// columns of l_basis span L and the columns of s_gens span S. Returns the
/// invariant factors (0 meaning a free Z summand, factors 1 dropped) together
/// with generator representatives in ambient coordinates.
struct QuotientStructure {
  IntVec factors;                 // torsion orders then zeros for free summands
  std::vector<IntVec> generators; // one ambient vector per reported factor
};

QuotientStructure quotient_structure(const IntMatrix& l_basis, const IntMatrix& s_gens);

}  // namespace nclift

#endif
