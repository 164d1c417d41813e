#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "inoue/int_poly.hpp"
#include "inoue/integers.hpp"

namespace inoue {

// Dense matrix over Z with arbitrary-precision entries. Everything here is
// exact; there is no floating point anywhere in this module.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
  // Companion matrix of a monic polynomial, coefficients in the last
  // column: C e_i = e_{i+1} for i < d and C e_d = -(c_0 e_1 + ... + c_{d-1} e_d).
  static IntMatrix companion(const IntPoly& p);
  static IntMatrix block_diag(const std::vector<IntMatrix>& blocks);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  int dim() const;

  Int& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator*(const Int& k) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& o) const;

  IntMatrix transpose() const;
  Int trace() const;
  IntMatrix pow(unsigned e) const;
  bool is_zero() const;

  std::string to_string() const;

private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// det via fraction-free Bareiss elimination. Exact for any size.
Int det(const IntMatrix& a);

// Characteristic polynomial det(xI - M), monic, by the Berkowitz method:
// division-free, so valid over Z for every dimension.
IntPoly char_poly(const IntMatrix& m);

// p(M) by Horner.
IntMatrix eval_poly_at(const IntPoly& p, const IntMatrix& m);

// Smith normal form U * A * V = D. U and V are unimodular, the diagonal of
// D is nonnegative with d_1 | d_2 | ... Pivoting picks the smallest nonzero
// absolute value with lowest (row, col) as the tie break, so the transforms
// are reproducible.
struct SNFResult {
  IntMatrix D, U, V;
  std::vector<Int> diagonal() const;
};

SNFResult smith_normal_form(const IntMatrix& a);

// Basis of the saturated right kernel lattice {x : A x = 0}, read off the
// columns of V for the zero entries of D.
std::vector<std::vector<Int>> kernel_lattice_basis(const IntMatrix& a);

// Inverse of a matrix with det = +/-1; raises hypothesis_violated otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

} // namespace inoue
