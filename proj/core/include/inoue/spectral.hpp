#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "inoue/factor.hpp"
#include "inoue/int_matrix.hpp"
#include "inoue/number_field.hpp"
#include "inoue/roots.hpp"

namespace inoue {

// One algebraic number: an irreducible factor of the characteristic
// polynomial plus the isolating region that pins down which of its roots
// is meant.
struct AlgebraicRoot {
  IntPoly min_poly;
  std::variant<RealIsolatingInterval, ComplexBox> region;
};

enum class RejectionReason {
  dim_even,
  det_not_one,
  real_root_count_not_one,
  alpha_multiple, // unreachable when the count includes multiplicity; kept for reporting
  alpha_rational,
};

const char* rejection_reason_name(RejectionReason r);

struct Rejection {
  RejectionReason reason;
  std::string detail;
};

// Acceptance record: the matrix satisfies every hypothesis of the
// construction. dim = 2n+1, det = 1, the characteristic polynomial has a
// single real root alpha which is simple and irrational, and n conjugate
// pairs above the real axis.
struct TypeICertificate {
  int dim = 0;
  int n = 0;
  IntPoly chi;
  AlgebraicRoot alpha;                                // real isolating interval
  std::vector<AlgebraicRoot> complex_pairs;           // one per upper-half-plane root
  bool det_ok = false;
  std::string alpha_simple;     // why the multiplicity is 1
  std::string alpha_irrational; // why alpha is not rational
  std::string alpha_positive;   // why alpha > 0 is automatic
  std::vector<std::string> notes;

  const RealIsolatingInterval& alpha_interval() const {
    return std::get<RealIsolatingInterval>(alpha.region);
  }
};

using CheckResult = std::variant<TypeICertificate, Rejection>;

CheckResult check_type_I(const IntMatrix& m);

struct DiagonalizabilityCertificate {
  bool diagonalizable = false;
  IntPoly squarefree_char; // g = squarefree part of the characteristic polynomial
  IntMatrix witness;       // g(M); zero iff diagonalizable over C
};

DiagonalizabilityCertificate is_diagonalizable(const IntMatrix& m);

// Exact generalized-eigenspace data for one irreducible factor: the chain
// basis over Q[x]/(factor), the block of the restricted action in that
// basis, and the tagged roots the numeric embeddings use.
struct ExactEigenBlock {
  IntPoly factor;
  int multiplicity = 1;                          // power of the factor in chi
  std::vector<std::vector<NFElem>> chain_basis;  // e vectors of length dim
  std::vector<std::vector<NFElem>> action_block; // e x e: M w_j = sum_i block[i][j] w_i
  std::vector<std::vector<NFElem>> action_block_inv;
  std::optional<RealIsolatingInterval> real_root; // present only for the alpha factor
  std::vector<ComplexBox> roots_upper;            // Im > 0, sorted by (re_lo, im_lo)
};

// Certified numeric eigen-data: the real eigenvector a, the basis B of the
// sum of upper-half generalized eigenspaces, the matrix R of the restricted
// action, and the rows v_i / columns u_i of (a | B).
struct EigenData {
  int n = 0;
  long bits = 0;
  DyadicInterval alpha;
  std::vector<DyadicInterval> a;                           // length 2n+1
  std::vector<std::vector<DyadicComplexInterval>> B;       // (2n+1) x n
  std::vector<std::vector<DyadicComplexInterval>> R;       // n x n, block diagonal
  std::vector<std::vector<DyadicComplexInterval>> R_inv;   // exact block inverses, embedded
  std::vector<DyadicComplexInterval> column_roots;         // root ball per B column
  std::vector<ExactEigenBlock> blocks;
  DyadicInterval basis_det;   // det of the real (2n+1)x(2n+1) matrix of the v_i
  Dyadic residual_max_width;  // max entrywise width of M B - B R
  bool residual_contains_zero = false;

  // v_i as a real row vector (a_i, Re b_1i, Im b_1i, ..., Re b_ni, Im b_ni).
  std::vector<DyadicInterval> v_row_real(int i) const;
  // u_i = v_i^T in R x C^n form: first the real coordinate, then complex.
  std::vector<DyadicComplexInterval> u_column(int i) const;
};

EigenData eigen_data(const IntMatrix& m, const TypeICertificate& cert, long bits);

// Result of re-verifying the defining identities: the enclosure of
// M B - B R contains zero, the exact per-factor action matches the stored
// blocks, and the matrix of (x, z) |-> (alpha x, R^T z) in the basis
// u_1..u_{2n+1} encloses M^T. Throws internal_inconsistency when any check
// fails.
struct ConjugationReport {
  Dyadic residual_max_width;
  bool exact_blocks_ok = false;
  bool transpose_matrix_ok = false;
  std::vector<std::vector<DyadicInterval>> matrix_in_u_basis; // encloses M^T
};

ConjugationReport verify_conjugation_relation(const IntMatrix& m, const EigenData& ed, long bits);

} // namespace inoue
