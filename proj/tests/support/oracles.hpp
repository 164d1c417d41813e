#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: cofactor determinants over the polynomial ring, minor-gcd Smith
// forms, double-precision root finding, and a cross-multiplication rank
// routine over number fields.

#include <cmath>
#include <vector>

#include "inoue/int_matrix.hpp"
#include "inoue/int_poly.hpp"
#include "inoue/number_field.hpp"

namespace oracle {

using inoue::Int;
using inoue::IntMatrix;
using inoue::IntPoly;

// Matrix over Z[x] as a dense vector of polynomials, row major.
struct PolyMatrix {
  int n = 0;
  std::vector<IntPoly> e;
  IntPoly& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
  const IntPoly& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
};

inline PolyMatrix x_i_minus(const IntMatrix& m) {
  PolyMatrix p;
  p.n = m.dim();
  p.e.assign(static_cast<std::size_t>(p.n) * p.n, IntPoly());
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      IntPoly v = IntPoly::constant(-m(i, j));
      if (i == j) v += IntPoly::x();
      p.at(i, j) = v;
    }
  return p;
}

// Cofactor expansion along the first row; exponential, fine for dim <= 8.
inline IntPoly det_cofactor(const PolyMatrix& m) {
  if (m.n == 0) return IntPoly::constant(1);
  if (m.n == 1) return m.at(0, 0);
  IntPoly acc;
  for (int j = 0; j < m.n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix sub;
    sub.n = m.n - 1;
    sub.e.reserve(static_cast<std::size_t>(sub.n) * sub.n);
    for (int i = 1; i < m.n; ++i)
      for (int k = 0; k < m.n; ++k)
        if (k != j) sub.e.push_back(m.at(i, k));
    IntPoly term = m.at(0, j) * det_cofactor(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline IntPoly char_poly_oracle(const IntMatrix& m) { return det_cofactor(x_i_minus(m)); }

// Smith invariant factors via gcds of k x k minors: d_k = gcd(all k-minors)
// / gcd(all (k-1)-minors). Exponential, for small matrices only.
inline std::vector<Int> snf_diagonal_oracle(const IntMatrix& a) {
  int rows = a.rows(), cols = a.cols();
  int kmax = std::min(rows, cols);
  auto minor_gcd = [&](int k) {
    Int g = 0;
    std::vector<int> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
    // Enumerate all row and column index subsets of size k.
    std::vector<int> rsel(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rsel[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<int> csel(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) csel[static_cast<std::size_t>(i)] = i;
      for (;;) {
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            sub(i, j) = a(rsel[static_cast<std::size_t>(i)], csel[static_cast<std::size_t>(j)]);
        Int d = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        int pos = k - 1;
        while (pos >= 0 && csel[static_cast<std::size_t>(pos)] == cols - k + pos) --pos;
        if (pos < 0) break;
        ++csel[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < k; ++j)
          csel[static_cast<std::size_t>(j)] = csel[static_cast<std::size_t>(j - 1)] + 1;
      }
      int pos = k - 1;
      while (pos >= 0 && rsel[static_cast<std::size_t>(pos)] == rows - k + pos) --pos;
      if (pos < 0) break;
      ++rsel[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < k; ++j)
        rsel[static_cast<std::size_t>(j)] = rsel[static_cast<std::size_t>(j - 1)] + 1;
    }
    return g;
  };
  std::vector<Int> d;
  Int prev = 1;
  for (int k = 1; k <= kmax; ++k) {
    Int g = minor_gcd(k);
    if (g == 0) {
      // All k x k minors vanish; the rest of the diagonal is zero.
      for (int i = k; i <= kmax; ++i) d.push_back(Int(0));
      return d;
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), g.get_mpz_t(), prev.get_mpz_t());
    d.push_back(q);
    prev = g;
  }
  return d;
}

// Double-precision root refinement by bisection; an independent numeric
// check for the exact enclosures.
inline double real_root_near(const IntPoly& p, double lo, double hi) {
  auto f = [&](double x) {
    double acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i).get_d();
    return acc;
  };
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((flo < 0) == (fm < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Rank over Q[x]/(modulus) by plain cross-multiplication elimination,
// no normalization or reduced echelon logic shared with the library path.
inline int nf_rank_oracle(const inoue::NumberField& F, inoue::NFMatrix m) {
  using inoue::NFElem;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    for (int i = row + 1; i < m.rows; ++i) {
      if (m.at(i, col).is_zero()) continue;
      NFElem a = m.at(row, col), b = m.at(i, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = nf_sub(F, nf_mul(F, m.at(i, j), a), nf_mul(F, m.at(row, j), b));
    }
    ++rank;
    ++row;
  }
  return rank;
}

} // namespace oracle
