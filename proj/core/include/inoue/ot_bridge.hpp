#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "inoue/spectral.hpp"

namespace inoue {

enum class UnitPolyRejection {
  not_monic,
  degree_not_odd_or_too_small,
  constant_term_not_minus_one,
  reducible,
  real_root_count_not_one,
};

const char* unit_poly_rejection_name(UnitPolyRejection r);

// Certificate that P is the minimal polynomial of a unit generating a
// degree-(2n+1) field with one real embedding: monic, odd degree >= 3,
// P(0) = -1 (so the companion matrix has determinant +1 in odd degree),
// irreducible, exactly one real root. Positivity of that root is forced:
// P(0) < 0 with a positive leading coefficient puts a root in (0, inf),
// and there is only one real root.
struct UnitPolyCertificate {
  IntPoly P;
  int degree = 0;
  int n = 0;
  std::string irreducible_record;
  std::string unit_constant_record;
  RealIsolatingInterval one_real_root;
  std::string alpha_positive_record;
};

std::variant<UnitPolyCertificate, UnitPolyRejection> validate_unit_poly(const IntPoly& p);

// D_P = C_P^T for the fixed companion convention (coefficients in the last
// column of C_P). char_poly(D_P) = P.
IntMatrix companion_transpose(const IntPoly& p);

// The number-field side of the correspondence at s = 1: embeddings as root
// enclosures, the lattice rows sigma(xi^k) = (alpha^k, beta_1^k, ...,
// beta_n^k) for k = 0..2n, and the diagonal action of the unit.
struct OTFieldData {
  int s = 1;
  int t = 0; // = n
  DyadicInterval alpha;
  std::vector<DyadicComplexInterval> betas; // upper half plane, sorted
  std::vector<std::vector<DyadicComplexInterval>> lattice_rows; // (2n+1) x (n+1), col 0 real
  long bits = 0;
};

OTFieldData ot_data(const IntPoly& p, long bits);

// Everything the correspondence proof compares, verified side by side:
// the companion transpose passes the type-I check, is diagonalizable, its
// R-matrix is diagonal with the beta enclosures on the diagonal, and the
// u-rows of the eigen data match the lattice rows sigma(xi^k).
struct CorrespondenceReport {
  UnitPolyCertificate unit;
  IntMatrix D;
  TypeICertificate type_I;
  bool diagonalizable = false;
  bool r_diagonal_matches = false;
  bool lattice_matches_u_rows = false;
  OTFieldData ot;
  EigenData eigen;
};

std::variant<CorrespondenceReport, UnitPolyRejection> correspondence_report(const IntPoly& p,
                                                                            long bits);

} // namespace inoue
