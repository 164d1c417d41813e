#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "inoue/int_matrix.hpp"
#include "inoue/spectral.hpp"

namespace inoue {

// Conjugation invariants cheap enough to compare before any witness search.
// Every component is individually invariant under GL(n, Z) conjugation.
struct ConjugacyFingerprint {
  IntPoly char_polynomial;
  std::vector<std::vector<Int>> snf_shifted; // SNF diagonal of A - cI per shift
  std::vector<Int> shifts;                   // the constants c used
  std::vector<Int> power_traces;             // tr(A^k), k = 1..dim
  std::vector<std::vector<Int>> snf_powers;  // SNF diagonals of (A-I)^2, (A-I)^3
};

ConjugacyFingerprint fingerprint(const IntMatrix& a,
                                 const std::vector<Int>& shifts = {Int(-2), Int(-1), Int(0), Int(1), Int(2)});

enum class ConjugacyOutcome { conjugate_to, conjugate_to_inverse, distinct, unknown };

struct ConjugacyVerdict {
  ConjugacyOutcome outcome = ConjugacyOutcome::unknown;
  std::optional<IntMatrix> witness;     // det +1, verified exactly
  std::string separating_invariant;     // for distinct
  std::string separating_values;
  long budget_used = 0;
  long det_negative_conversions = 0;    // odd-dimension sign fixes that occurred
};

// Decide whether A is conjugate to B or to B^{-1} in SL(dim, Z). Requires
// det A = det B = 1 and that 1 is an eigenvalue of neither. Fingerprint
// separation gives distinct; otherwise the integer solution lattice of
// C A = B C is searched (LLL-reduced basis, max-norm shells) up to budget
// candidates. Any returned witness satisfies C A C^{-1} = target with
// det C = +1, re-verified exactly. The shift constants feed the fingerprint
// comparison; the default set is fixed for reproducibility.
ConjugacyVerdict decide_conjugacy(const IntMatrix& a, const IntMatrix& b, long budget,
                                  const std::vector<Int>& shifts = {Int(-2), Int(-1), Int(0),
                                                                    Int(1), Int(2)});

enum class HomeoOutcome { homeomorphic, not_homeomorphic, unknown };
enum class HomeoMapKind { direct, inverse_composition };

// A positive verdict carries the orientation-preserving diffeomorphism:
// either (x, t) |-> (Cx, t) directly, or the composition of (x,t)->(-x,t),
// (x,t)->(Cx,t), (x,t)->(x,1-t) when A is conjugate to B^{-1}.
struct HomeoVerdict {
  HomeoOutcome outcome = HomeoOutcome::unknown;
  HomeoMapKind map_kind = HomeoMapKind::direct;
  std::optional<IntMatrix> witness;
  std::string obstruction; // pi_1 invariant for the negative case
  ConjugacyVerdict conjugacy;
};

HomeoVerdict homeo_verdict(const IntMatrix& a, const IntMatrix& b, long budget,
                           const std::vector<Int>& shifts = {Int(-2), Int(-1), Int(0), Int(1),
                                                             Int(2)});

enum class SemidirectType { diagonal, non_diagonal, has_eigenvalue_one };
const char* semidirect_type_name(SemidirectType t);

// Type of the semidirect product Z x|_A Z^k: eigenvalue 1 disqualifies,
// otherwise diagonalizability over C decides.
SemidirectType semidirect_type(const IntMatrix& a);

struct OtExclusion {
  bool excluded = false;
  SemidirectType monodromy_type;
  std::vector<std::string> reasons;
};

// Separates T_M from the number-field quotient manifolds: a
// non-diagonalizable monodromy makes pi_1 a semidirect product of
// non-diagonal type, which no such quotient has.
OtExclusion ot_exclusion(const IntMatrix& m);

} // namespace inoue
