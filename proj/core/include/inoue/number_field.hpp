#pragma once

#include <vector>

#include "inoue/int_matrix.hpp"
#include "inoue/qpoly.hpp"

namespace inoue {

// The field Q[x]/(modulus) for a monic polynomial that the caller certifies
// irreducible. Elements are reduced representatives in QPoly form. If the
// modulus is in fact reducible, inversion meets a zero divisor and raises
// errc::zero_divisor, naming the nontrivial factor found.
struct NumberField {
  explicit NumberField(IntPoly modulus_in);
  IntPoly modulus;
  QPoly modq;
  int degree;
};

using NFElem = QPoly;

NFElem nf_reduce(const NumberField& F, const QPoly& a);
NFElem nf_from_int(const NumberField& F, const Int& v);
NFElem nf_generator(const NumberField& F); // the class of x
NFElem nf_add(const NumberField& F, const NFElem& a, const NFElem& b);
NFElem nf_sub(const NumberField& F, const NFElem& a, const NFElem& b);
NFElem nf_mul(const NumberField& F, const NFElem& a, const NFElem& b);
NFElem nf_inv(const NumberField& F, const NFElem& a);
NFElem nf_div(const NumberField& F, const NFElem& a, const NFElem& b);

// Dense matrix over the field.
struct NFMatrix {
  NFMatrix() : rows(0), cols(0) {}
  NFMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}
  int rows, cols;
  std::vector<NFElem> e;
  NFElem& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
  const NFElem& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }
};

// M viewed over the field, minus x * I when subtract_x is set: the matrix
// whose kernel is the generalized eigenspace machinery works on.
NFMatrix nfm_from_int(const NumberField& F, const IntMatrix& m, bool subtract_x = false);
NFMatrix nfm_mul(const NumberField& F, const NFMatrix& a, const NFMatrix& b);
NFMatrix nfm_pow(const NumberField& F, const NFMatrix& a, unsigned e);
int nfm_rank(const NumberField& F, NFMatrix a);

// Basis of the right kernel by Gauss-Jordan elimination over the field.
// Exact; output vectors satisfy A v = 0 identically.
std::vector<std::vector<NFElem>> kernel_basis_mod(const NumberField& F, const NFMatrix& a);

bool nf_vec_is_zero(const std::vector<NFElem>& v);

} // namespace inoue
