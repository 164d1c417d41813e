#include "inoue/number_field.hpp"

namespace inoue {

NumberField::NumberField(IntPoly modulus_in) : modulus(std::move(modulus_in)) {
  if (!modulus.is_monic() || modulus.degree() < 1)
    fail(errc::invalid_input, "number field modulus must be monic of degree >= 1");
  modq = QPoly::from_int(modulus);
  degree = modulus.degree();
}

NFElem nf_reduce(const NumberField& F, const QPoly& a) {
  if (a.degree() < F.degree) return a;
  QPoly q, r;
  qpoly_divrem(a, F.modq, q, r);
  return r;
}

NFElem nf_from_int(const NumberField& F, const Int& v) {
  (void)F;
  if (v == 0) return QPoly();
  return QPoly::constant(Rat(v));
}

NFElem nf_generator(const NumberField& F) {
  return nf_reduce(F, QPoly({Rat(0), Rat(1)}));
}

NFElem nf_add(const NumberField&, const NFElem& a, const NFElem& b) { return a + b; }
NFElem nf_sub(const NumberField&, const NFElem& a, const NFElem& b) { return a - b; }

NFElem nf_mul(const NumberField& F, const NFElem& a, const NFElem& b) {
  return nf_reduce(F, a * b);
}

NFElem nf_inv(const NumberField& F, const NFElem& a) {
  if (a.is_zero()) fail(errc::invalid_input, "inverse of zero in a number field");
  QPoly s, t;
  QPoly g = qpoly_ext_gcd(a, F.modq, s, t);
  if (g.degree() != 0) {
    // a shares a factor with the modulus: the modulus is reducible.
    fail(errc::zero_divisor,
         "zero divisor encountered: modulus is reducible, gcd factor " +
             g.to_primitive_int().to_string());
  }
  // g is the monic constant 1, so s * a = 1 (mod modulus).
  return nf_reduce(F, s);
}

NFElem nf_div(const NumberField& F, const NFElem& a, const NFElem& b) {
  return nf_mul(F, a, nf_inv(F, b));
}

NFMatrix nfm_from_int(const NumberField& F, const IntMatrix& m, bool subtract_x) {
  NFMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      QPoly v;
      if (m(i, j) != 0) v = QPoly::constant(Rat(m(i, j)));
      if (subtract_x && i == j) v = v - nf_generator(F);
      r.at(i, j) = nf_reduce(F, v);
    }
  return r;
}

NFMatrix nfm_mul(const NumberField& F, const NFMatrix& a, const NFMatrix& b) {
  if (a.cols != b.rows) fail(errc::invalid_input, "NFMatrix shape mismatch");
  NFMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const NFElem& v = a.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = r.at(i, j) + nf_mul(F, v, b.at(k, j));
    }
  return r;
}

NFMatrix nfm_pow(const NumberField& F, const NFMatrix& a, unsigned e) {
  if (a.rows != a.cols) fail(errc::invalid_input, "NFMatrix power needs a square matrix");
  NFMatrix r(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) r.at(i, i) = QPoly::constant(Rat(1));
  NFMatrix base = a;
  while (e) {
    if (e & 1u) r = nfm_mul(F, r, base);
    e >>= 1u;
    if (e) base = nfm_mul(F, base, base);
  }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> nfm_rref(const NumberField& F, NFMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int piv = -1;
    for (int i = row; i < a.rows; ++i)
      if (!a.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(row, j));
    NFElem inv = nf_inv(F, a.at(row, col));
    for (int j = col; j < a.cols; ++j) a.at(row, j) = nf_mul(F, a.at(row, j), inv);
    for (int i = 0; i < a.rows; ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      NFElem f = a.at(i, col);
      for (int j = col; j < a.cols; ++j)
        a.at(i, j) = a.at(i, j) - nf_mul(F, f, a.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

int nfm_rank(const NumberField& F, NFMatrix a) {
  return static_cast<int>(nfm_rref(F, a).size());
}

std::vector<std::vector<NFElem>> kernel_basis_mod(const NumberField& F, const NFMatrix& a) {
  NFMatrix r = a;
  std::vector<int> pivots = nfm_rref(F, r);
  std::vector<char> is_pivot(static_cast<std::size_t>(a.cols), 0);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;

  std::vector<std::vector<NFElem>> basis;
  for (int free_col = 0; free_col < a.cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    std::vector<NFElem> v(static_cast<std::size_t>(a.cols));
    v[static_cast<std::size_t>(free_col)] = QPoly::constant(Rat(1));
    for (std::size_t prow = 0; prow < pivots.size(); ++prow) {
      int pcol = pivots[prow];
      v[static_cast<std::size_t>(pcol)] = -r.at(static_cast<int>(prow), free_col);
    }
    // Normalize the first nonzero coordinate (by index) to 1.
    for (auto& x : v)
      if (!x.is_zero()) {
        NFElem inv = nf_inv(F, x);
        for (auto& y : v) y = nf_mul(F, y, inv);
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool nf_vec_is_zero(const std::vector<NFElem>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

} // namespace inoue
