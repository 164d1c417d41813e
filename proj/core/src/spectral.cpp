#include "inoue/spectral.hpp"

#include <algorithm>

namespace inoue {

const char* rejection_reason_name(RejectionReason r) {
  switch (r) {
  case RejectionReason::dim_even: return "dim-even";
  case RejectionReason::det_not_one: return "det-not-1";
  case RejectionReason::real_root_count_not_one: return "real-root-count-not-1";
  case RejectionReason::alpha_multiple: return "alpha-multiple";
  case RejectionReason::alpha_rational: return "alpha-rational";
  }
  return "unknown";
}

namespace {

bool box_less(const ComplexBox& a, const ComplexBox& b) {
  if (a.re_lo != b.re_lo) return a.re_lo < b.re_lo;
  return a.im_lo < b.im_lo;
}

} // namespace

CheckResult check_type_I(const IntMatrix& m) {
  if (!m.is_square()) fail(errc::invalid_input, "type-I check needs a square matrix");
  int dim = m.dim();
  if (dim % 2 == 0)
    return Rejection{RejectionReason::dim_even, "dimension " + std::to_string(dim) + " is even"};

  IntPoly chi = char_poly(m);
  // det M = (-1)^dim chi(0) = -chi(0) in odd dimension.
  Int detM = -chi.coeff(0);
  if (detM != 1)
    return Rejection{RejectionReason::det_not_one, "det = " + detM.get_str()};

  // Real root census, multiplicities included.
  std::vector<RealIsolatingInterval> reals = isolate_real_roots(chi);
  int count_with_mult = 0;
  for (const auto& r : reals) count_with_mult += r.multiplicity;
  if (count_with_mult != 1)
    return Rejection{RejectionReason::real_root_count_not_one,
                     "real eigenvalue count (with multiplicity) = " + std::to_string(count_with_mult)};

  // |chi(0)| = 1, so the only rational candidates are +-1.
  if (chi.eval(Int(1)) == 0)
    return Rejection{RejectionReason::alpha_rational, "1 is an eigenvalue"};
  if (chi.eval(Int(-1)) == 0)
    return Rejection{RejectionReason::alpha_rational, "-1 is an eigenvalue"};

  TypeICertificate cert;
  cert.dim = dim;
  cert.n = (dim - 1) / 2;
  cert.chi = chi;
  cert.det_ok = true;
  cert.alpha_simple = "single real root with total multiplicity 1 in the real-root census";
  cert.alpha_irrational =
      "det M = 1 forces |chi(0)| = 1, so rational roots could only be +-1; chi(1) = " +
      chi.eval(Int(1)).get_str() + ", chi(-1) = " + chi.eval(Int(-1)).get_str();
  cert.alpha_positive =
      "dim odd and det M = 1: det = alpha * prod |beta_j|^2, so alpha > 0 is automatic";

  // Per-irreducible-factor regions. The factor containing alpha is the one
  // with a real root.
  auto factors = factorize(chi);
  bool alpha_found = false;
  for (const auto& [fac, mult] : factors) {
    std::vector<RealIsolatingInterval> fr = isolate_real_roots(fac);
    std::vector<ComplexBox> boxes = enclose_complex_roots(fac, 32);
    if (!fr.empty()) {
      if (fr.size() != 1 || mult != 1 || alpha_found)
        fail(errc::internal_inconsistency, "real root census disagrees with the factorization");
      cert.alpha = AlgebraicRoot{fac, fr.front()};
      alpha_found = true;
    }
    std::vector<ComplexBox> upper;
    for (const auto& b : boxes)
      if (b.im_lo > 0) upper.push_back(b);
    std::sort(upper.begin(), upper.end(), box_less);
    for (const auto& b : upper) {
      ComplexBox tagged = b;
      tagged.multiplicity = mult; // multiplicity in chi
      for (int copy = 0; copy < mult; ++copy)
        cert.complex_pairs.push_back(AlgebraicRoot{fac, tagged});
      // Unit-modulus eigenvalues are admitted by the hypotheses; leave a
      // note when the enclosure is consistent with |beta| = 1.
      DyadicComplexInterval ball = b.to_ball(96);
      if (norm_sq(ball, 96).contains(Rat(1)))
        cert.notes.push_back("complex pair for factor " + fac.to_string() +
                             " may lie on the unit circle; the hypotheses admit this");
    }
  }
  if (!alpha_found) fail(errc::internal_inconsistency, "accepted matrix without a real root");
  if (static_cast<int>(cert.complex_pairs.size()) != cert.n)
    fail(errc::internal_inconsistency, "conjugate pair count mismatch");

  // alpha > 0 must hold automatically; a failure here is a bug, not input error.
  if (!(cert.alpha_interval().hi > 0) || cert.chi.sign_at(Rat(0)) == 0)
    fail(errc::internal_inconsistency, "unique real eigenvalue is not positive");
  if (cert.alpha_interval().lo < 0) {
    // The isolating interval may straddle 0 only if alpha were negative.
    if (sturm_count(squarefree_part(cert.chi), Rat(0), cert.alpha_interval().hi) != 1)
      fail(errc::internal_inconsistency, "unique real eigenvalue is not positive");
  }
  // det(M - I) != 0 is forced: eigenvalue 1 would have to be the real root.
  if (cert.chi.eval(Int(1)) == 0)
    fail(errc::internal_inconsistency, "det(M - I) = 0 on an accepted matrix");

  return cert;
}

DiagonalizabilityCertificate is_diagonalizable(const IntMatrix& m) {
  DiagonalizabilityCertificate cert;
  cert.squarefree_char = squarefree_part(char_poly(m));
  cert.witness = eval_poly_at(cert.squarefree_char, m);
  cert.diagonalizable = cert.witness.is_zero();
  return cert;
}

// ---------------------------------------------------------------------------
// Eigen data

namespace {

// Embed an element of Q[x]/(f) at a root enclosure.
DyadicComplexInterval embed_at(const NFElem& elem, const DyadicComplexInterval& root, long prec) {
  DyadicComplexInterval acc;
  for (int i = elem.degree(); i >= 0; --i) {
    acc = mul(acc, root, prec);
    if (elem.coeff(i) != 0)
      acc.re = add(acc.re, DyadicInterval::from_rat(elem.coeff(i), prec), prec);
  }
  return acc;
}

DyadicInterval embed_at_real(const NFElem& elem, const DyadicInterval& root, long prec) {
  DyadicInterval acc;
  for (int i = elem.degree(); i >= 0; --i) {
    acc = mul(acc, root, prec);
    if (elem.coeff(i) != 0) acc = add(acc, DyadicInterval::from_rat(elem.coeff(i), prec), prec);
  }
  return acc;
}

// Extend `have` (independent vectors over F) by vectors from `pool` until it
// spans the same space as `pool`; added vectors are normalized to leading 1.
void extend_basis(const NumberField& F, std::vector<std::vector<NFElem>>& have,
                  const std::vector<std::vector<NFElem>>& pool) {
  for (const auto& candidate : pool) {
    // Reduce candidate against current span by elimination.
    std::vector<std::vector<NFElem>> mat;
    for (const auto& v : have) mat.push_back(v);
    mat.push_back(candidate);
    // Rank test: candidate is new iff rank grows.
    int dimv = static_cast<int>(candidate.size());
    NFMatrix a(static_cast<int>(mat.size()), dimv);
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (nfm_rank(F, a) > static_cast<int>(have.size())) {
      std::vector<NFElem> v = candidate;
      for (auto& x : v)
        if (!x.is_zero()) {
          NFElem inv = nf_inv(F, x);
          for (auto& y : v) y = nf_mul(F, y, inv);
          break;
        }
      have.push_back(std::move(v));
    }
  }
}

// Interval Gaussian elimination: solves A X = B for square ball matrix A.
// Pivots must exclude zero; otherwise precision_exhausted.
std::vector<std::vector<DyadicInterval>> solve_ball(std::vector<std::vector<DyadicInterval>> a,
                                                    std::vector<std::vector<DyadicInterval>> b,
                                                    long prec) {
  int n = static_cast<int>(a.size());
  int m = b.empty() ? 0 : static_cast<int>(b.front().size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    Dyadic best;
    for (int i = col; i < n; ++i) {
      Dyadic mig = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].mig_lower();
      if (mig.sgn() > 0 && (piv < 0 || cmp(mig, best) > 0)) { piv = i; best = mig; }
    }
    if (piv < 0)
      fail(errc::precision_exhausted, "interval elimination pivot contains zero; retry with higher bits");
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
    std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(piv)]);
    DyadicInterval inv = recip(a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)], prec);
    for (int j = col; j < n; ++j)
      a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] =
          mul(a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)], inv, prec);
    for (int j = 0; j < m; ++j)
      b[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] =
          mul(b[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)], inv, prec);
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      DyadicInterval f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f.contains_zero() && f.is_exact()) continue;
      for (int j = col; j < n; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            sub(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                mul(f, a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)], prec), prec);
      for (int j = 0; j < m; ++j)
        b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            sub(b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                mul(f, b[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)], prec), prec);
    }
  }
  return b;
}

DyadicInterval det_ball(std::vector<std::vector<DyadicInterval>> a, long prec) {
  int n = static_cast<int>(a.size());
  DyadicInterval det = DyadicInterval::from_int(Int(1));
  int sign = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    Dyadic best;
    for (int i = col; i < n; ++i) {
      Dyadic mig = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].mig_lower();
      if (mig.sgn() > 0 && (piv < 0 || cmp(mig, best) > 0)) { piv = i; best = mig; }
    }
    if (piv < 0)
      fail(errc::precision_exhausted,
           "determinant enclosure cannot exclude zero; retry with higher bits");
    if (piv != col) {
      std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
      sign = -sign;
    }
    const DyadicInterval& pivot = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det = mul(det, pivot, prec);
    DyadicInterval inv = recip(pivot, prec);
    for (int i = col + 1; i < n; ++i) {
      DyadicInterval f = mul(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)], inv, prec);
      for (int j = col; j < n; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            sub(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                mul(f, a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)], prec), prec);
    }
  }
  return sign > 0 ? det : -det;
}

// e x e inverse over the field by Gauss-Jordan.
std::vector<std::vector<NFElem>> nf_block_inverse(const NumberField& F,
                                                  const std::vector<std::vector<NFElem>>& block) {
  int e = static_cast<int>(block.size());
  NFMatrix a(e, 2 * e);
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) a.at(i, j) = block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    a.at(i, e + i) = QPoly::constant(Rat(1));
  }
  for (int col = 0; col < e; ++col) {
    int piv = -1;
    for (int i = col; i < e; ++i)
      if (!a.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) fail(errc::internal_inconsistency, "singular action block");
    if (piv != col)
      for (int j = 0; j < 2 * e; ++j) std::swap(a.at(piv, j), a.at(col, j));
    NFElem inv = nf_inv(F, a.at(col, col));
    for (int j = 0; j < 2 * e; ++j) a.at(col, j) = nf_mul(F, a.at(col, j), inv);
    for (int i = 0; i < e; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      NFElem f = a.at(i, col);
      for (int j = 0; j < 2 * e; ++j) a.at(i, j) = a.at(i, j) - nf_mul(F, f, a.at(col, j));
    }
  }
  std::vector<std::vector<NFElem>> inv(static_cast<std::size_t>(e), std::vector<NFElem>(static_cast<std::size_t>(e)));
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, e + j);
  return inv;
}

} // namespace

std::vector<DyadicInterval> EigenData::v_row_real(int i) const {
  std::vector<DyadicInterval> row;
  row.reserve(static_cast<std::size_t>(2 * n + 1));
  row.push_back(a[static_cast<std::size_t>(i)]);
  for (int j = 0; j < n; ++j) {
    row.push_back(B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].re);
    row.push_back(B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].im);
  }
  return row;
}

std::vector<DyadicComplexInterval> EigenData::u_column(int i) const {
  std::vector<DyadicComplexInterval> col;
  col.reserve(static_cast<std::size_t>(n + 1));
  col.push_back(DyadicComplexInterval::from_real(a[static_cast<std::size_t>(i)]));
  for (int j = 0; j < n; ++j) col.push_back(B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return col;
}

EigenData eigen_data(const IntMatrix& m, const TypeICertificate& cert, long bits) {
  int dim = cert.dim;
  int n = cert.n;
  long prec = bits + 64;
  EigenData ed;
  ed.n = n;
  ed.bits = bits;
  ed.a.assign(static_cast<std::size_t>(dim), DyadicInterval());
  ed.B.assign(static_cast<std::size_t>(dim), std::vector<DyadicComplexInterval>(static_cast<std::size_t>(n)));
  ed.R.assign(static_cast<std::size_t>(n), std::vector<DyadicComplexInterval>(static_cast<std::size_t>(n)));
  ed.R_inv.assign(static_cast<std::size_t>(n), std::vector<DyadicComplexInterval>(static_cast<std::size_t>(n)));
  ed.column_roots.assign(static_cast<std::size_t>(n), DyadicComplexInterval());

  auto factors = factorize(cert.chi);
  // poly_less order is the canonical basis order of W.
  int col = 0;
  bool alpha_done = false;
  for (const auto& [fac, mult] : factors) {
    NumberField F(fac);
    ExactEigenBlock block;
    block.factor = fac;
    block.multiplicity = mult;

    NFMatrix a_matrix = nfm_from_int(F, m, /*subtract_x=*/true);
    // Chain basis ordered by depth: kernel of (M - xI), then extensions for
    // each higher power up to the factor's multiplicity.
    std::vector<std::vector<NFElem>> chain;
    NFMatrix power = a_matrix;
    for (int depth = 1; depth <= mult; ++depth) {
      auto kb = kernel_basis_mod(F, power);
      extend_basis(F, chain, kb);
      if (depth < mult) power = nfm_mul(F, power, a_matrix);
    }
    if (static_cast<int>(chain.size()) != mult)
      fail(errc::internal_inconsistency, "generalized eigenspace dimension mismatch");
    block.chain_basis = chain;

    // Exact action block: M w_j = sum_i block[i][j] w_i, solved over the field.
    {
      int e = mult;
      NFMatrix sys(dim, e + e); // [ basis | M basis ]
      for (int j = 0; j < e; ++j)
        for (int i = 0; i < dim; ++i) sys.at(i, j) = chain[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      for (int j = 0; j < e; ++j) {
        for (int i = 0; i < dim; ++i) {
          NFElem acc;
          for (int k = 0; k < dim; ++k) {
            if (m(i, k) == 0) continue;
            acc = acc + nf_mul(F, nf_from_int(F, m(i, k)), chain[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
          }
          sys.at(i, e + j) = acc;
        }
      }
      // Eliminate: express the M-images in the chain basis.
      int row = 0;
      for (int c2 = 0; c2 < e && row < dim; ++c2) {
        int piv = -1;
        for (int i = row; i < dim; ++i)
          if (!sys.at(i, c2).is_zero()) { piv = i; break; }
        if (piv < 0) fail(errc::internal_inconsistency, "dependent chain basis");
        if (piv != row)
          for (int j = 0; j < sys.cols; ++j) std::swap(sys.at(piv, j), sys.at(row, j));
        NFElem inv = nf_inv(F, sys.at(row, c2));
        for (int j = 0; j < sys.cols; ++j) sys.at(row, j) = nf_mul(F, sys.at(row, j), inv);
        for (int i = 0; i < dim; ++i) {
          if (i == row || sys.at(i, c2).is_zero()) continue;
          NFElem f = sys.at(i, c2);
          for (int j = 0; j < sys.cols; ++j) sys.at(i, j) = sys.at(i, j) - nf_mul(F, f, sys.at(row, j));
        }
        ++row;
      }
      block.action_block.assign(static_cast<std::size_t>(e), std::vector<NFElem>(static_cast<std::size_t>(e)));
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
          block.action_block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sys.at(i, e + j);
      // Rows below e must have vanished in the image columns.
      for (int i = e; i < dim; ++i)
        for (int j = 0; j < e; ++j)
          if (!sys.at(i, e + j).is_zero())
            fail(errc::internal_inconsistency, "M image leaves the generalized eigenspace");
      block.action_block_inv = nf_block_inverse(F, block.action_block);
    }

    // Roots of this factor.
    std::vector<RealIsolatingInterval> fr = isolate_real_roots(fac);
    std::vector<ComplexBox> boxes = enclose_complex_roots(fac, bits + 2);
    std::vector<ComplexBox> upper;
    for (const auto& b : boxes)
      if (b.im_lo > 0) upper.push_back(b);
    std::sort(upper.begin(), upper.end(), box_less);
    block.roots_upper = upper;

    if (!fr.empty()) {
      // The alpha factor: evaluate the depth-1 basis vector at alpha.
      if (alpha_done || mult != 1)
        fail(errc::internal_inconsistency, "alpha factor bookkeeping failed");
      alpha_done = true;
      block.real_root = fr.front();
      ed.alpha = refine_real(fac, fr.front(), prec);
      for (int i = 0; i < dim; ++i)
        ed.a[static_cast<std::size_t>(i)] =
            embed_at_real(chain.front()[static_cast<std::size_t>(i)], ed.alpha, prec);
    }

    // One column block per upper root: chain vectors evaluated there.
    for (const auto& root_box : upper) {
      DyadicComplexInterval root = root_box.to_ball(prec);
      for (int j = 0; j < mult; ++j) {
        for (int i = 0; i < dim; ++i)
          ed.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(col + j)] =
              embed_at(chain[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], root, prec);
        ed.column_roots[static_cast<std::size_t>(col + j)] = root;
      }
      for (int i = 0; i < mult; ++i)
        for (int j = 0; j < mult; ++j) {
          ed.R[static_cast<std::size_t>(col + i)][static_cast<std::size_t>(col + j)] =
              embed_at(block.action_block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], root, prec);
          ed.R_inv[static_cast<std::size_t>(col + i)][static_cast<std::size_t>(col + j)] =
              embed_at(block.action_block_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], root, prec);
        }
      col += mult;
    }
    ed.blocks.push_back(std::move(block));
  }
  if (col != n || !alpha_done)
    fail(errc::internal_inconsistency, "basis of W has the wrong dimension");

  // Certified identities stored with the data: the real matrix of the v_i
  // is invertible, and M B = B R within enclosures.
  {
    std::vector<std::vector<DyadicInterval>> vm;
    for (int i = 0; i < dim; ++i) vm.push_back(ed.v_row_real(i));
    ed.basis_det = det_ball(vm, prec);
    if (!ed.basis_det.excludes_zero())
      fail(errc::precision_exhausted,
           "basis determinant enclosure contains zero; retry with higher bits");
  }
  {
    Dyadic max_width;
    bool all_contain_zero = true;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < n; ++j) {
        DyadicComplexInterval mb;
        for (int k = 0; k < dim; ++k) {
          if (m(i, k) == 0) continue;
          DyadicComplexInterval term = ed.B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
          term.re = mul_exact_scalar(term.re, Dyadic::from_int(m(i, k)));
          term.im = mul_exact_scalar(term.im, Dyadic::from_int(m(i, k)));
          mb = add(mb, term, prec);
        }
        DyadicComplexInterval br;
        for (int k = 0; k < n; ++k)
          br = add(br, mul(ed.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                           ed.R[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)], prec),
                   prec);
        DyadicComplexInterval diff = sub(mb, br, prec);
        if (!diff.contains_zero()) all_contain_zero = false;
        Dyadic w = diff.width_max();
        if (cmp(w, max_width) > 0) max_width = w;
      }
    ed.residual_max_width = max_width;
    ed.residual_contains_zero = all_contain_zero;
    if (!all_contain_zero)
      fail(errc::internal_inconsistency, "M B - B R enclosure misses zero");
  }

  // Published enclosures are padded to radius 2^-(bits+2) on top of raw
  // radii below 2^-(bits+6). Every deliverable then has width <= 2^-bits,
  // and data at bits b+16 nest entrywise inside data at bits b: both carry
  // the exact value, and the coarser pad dominates the finer one plus any
  // center disagreement.
  {
    Dyadic pad = Dyadic::one_shifted(-(bits + 2));
    Dyadic raw_cap = Dyadic::one_shifted(-(bits + 6));
    auto widen = [&](DyadicInterval& v) {
      if (v.r.is_zero()) return; // exact values stay exact
      if (cmp(v.r, raw_cap) > 0)
        fail(errc::precision_exhausted, "enclosure wider than the contract; retry with higher bits");
      v = DyadicInterval(v.c, v.r + pad);
    };
    auto widen_c = [&](DyadicComplexInterval& v) {
      widen(v.re);
      widen(v.im);
    };
    widen(ed.alpha);
    for (auto& x : ed.a) widen(x);
    for (auto& row : ed.B)
      for (auto& x : row) widen_c(x);
    for (auto& row : ed.R)
      for (auto& x : row) widen_c(x);
    for (auto& row : ed.R_inv)
      for (auto& x : row) widen_c(x);
    for (auto& x : ed.column_roots) widen_c(x);
  }
  return ed;
}

ConjugationReport verify_conjugation_relation(const IntMatrix& m, const EigenData& ed, long bits) {
  long prec = bits + 64;
  int dim = m.dim();
  int n = ed.n;
  ConjugationReport report;

  // (i) M B - B R encloses zero entrywise (recomputed from the stored data).
  {
    Dyadic max_width;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < n; ++j) {
        DyadicComplexInterval mb;
        for (int k = 0; k < dim; ++k) {
          if (m(i, k) == 0) continue;
          DyadicComplexInterval term = ed.B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
          term.re = mul_exact_scalar(term.re, Dyadic::from_int(m(i, k)));
          term.im = mul_exact_scalar(term.im, Dyadic::from_int(m(i, k)));
          mb = add(mb, term, prec);
        }
        DyadicComplexInterval br;
        for (int k = 0; k < n; ++k)
          br = add(br, mul(ed.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                           ed.R[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)], prec),
                   prec);
        DyadicComplexInterval diff = sub(mb, br, prec);
        if (!diff.contains_zero())
          fail(errc::internal_inconsistency, "M B = B R fails at interval precision");
        Dyadic w = diff.width_max();
        if (cmp(w, max_width) > 0) max_width = w;
      }
    report.residual_max_width = max_width;
  }

  // (ii) Exact identity in the per-factor representation.
  for (const auto& block : ed.blocks) {
    NumberField F(block.factor);
    int e = block.multiplicity;
    for (int j = 0; j < e; ++j) {
      for (int i2 = 0; i2 < dim; ++i2) {
        NFElem lhs;
        for (int k = 0; k < dim; ++k) {
          if (m(i2, k) == 0) continue;
          lhs = lhs + nf_mul(F, nf_from_int(F, m(i2, k)),
                             block.chain_basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
        }
        NFElem rhs;
        for (int k = 0; k < e; ++k)
          rhs = rhs + nf_mul(F, block.action_block[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)],
                             block.chain_basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(i2)]);
        if (!(lhs - rhs).is_zero())
          fail(errc::internal_inconsistency, "exact action block identity fails");
      }
    }
  }
  report.exact_blocks_ok = true;

  // (iii) The matrix of (x, z) |-> (alpha x, R^T z) in the u basis encloses
  // M^T. Solve U C = G U columnwise in the real picture.
  {
    int k = 2 * n + 1;
    std::vector<std::vector<DyadicInterval>> U(static_cast<std::size_t>(k),
                                               std::vector<DyadicInterval>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) {
      auto row = ed.v_row_real(i);
      for (int j = 0; j < k; ++j) U[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(j)];
    }
    // G: the real matrix of the map; alpha on the first coordinate, then
    // 2x2 rotation-style blocks of R^T entries.
    std::vector<std::vector<DyadicInterval>> G(static_cast<std::size_t>(k),
                                               std::vector<DyadicInterval>(static_cast<std::size_t>(k)));
    G[0][0] = ed.alpha;
    for (int bi = 0; bi < n; ++bi)
      for (int bj = 0; bj < n; ++bj) {
        // (R^T)_{bi, bj} = R_{bj, bi}
        const DyadicComplexInterval& s = ed.R[static_cast<std::size_t>(bj)][static_cast<std::size_t>(bi)];
        G[static_cast<std::size_t>(1 + 2 * bi)][static_cast<std::size_t>(1 + 2 * bj)] = s.re;
        G[static_cast<std::size_t>(1 + 2 * bi)][static_cast<std::size_t>(1 + 2 * bj + 1)] = -s.im;
        G[static_cast<std::size_t>(1 + 2 * bi + 1)][static_cast<std::size_t>(1 + 2 * bj)] = s.im;
        G[static_cast<std::size_t>(1 + 2 * bi + 1)][static_cast<std::size_t>(1 + 2 * bj + 1)] = s.re;
      }
    // T = G * U
    std::vector<std::vector<DyadicInterval>> T(static_cast<std::size_t>(k),
                                               std::vector<DyadicInterval>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        DyadicInterval acc;
        for (int l = 0; l < k; ++l)
          acc = add(acc, mul(G[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)],
                             U[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)], prec),
                    prec);
        T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
      }
    auto C = solve_ball(U, T, prec);
    // C must enclose M^T entrywise.
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (!C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].contains(Rat(m(j, i))))
          fail(errc::internal_inconsistency, "u-basis matrix does not enclose M^T");
    report.matrix_in_u_basis = std::move(C);
  }
  report.transpose_matrix_ok = true;
  return report;
}

} // namespace inoue
