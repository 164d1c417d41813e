#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "inoue/classify.hpp"
#include "inoue/presentation.hpp"
#include "inoue/spectral.hpp"

namespace inoue {

enum class LckFlag { exists_by_tricerri, obstructed, unknown };
enum class OtFlag { excluded, possible };

const char* lck_flag_name(LckFlag f);
const char* ot_flag_name(OtFlag f);

// Geometric conclusions derived from the certificates alone: the manifold
// is never Kaehler (b_1 = 1), its Kodaira dimension is -infinity, the LCK
// question depends on diagonalizability (obstructed when M is not
// diagonalizable; for surfaces a classical construction provides one), and
// a non-diagonalizable monodromy excludes homeomorphism with the
// number-field quotients.
struct GeometricFlags {
  bool kahler = false;               // never Kaehler
  bool kodaira_minus_infinity = true;
  LckFlag lck = LckFlag::unknown;
  OtFlag ot_homeomorphic = OtFlag::possible;
};

struct MappingTorusData {
  int fiber_dim = 0;    // 2n+1
  IntMatrix monodromy;  // exactly M^T
};

struct InoueDescriptor {
  IntMatrix M;
  TypeICertificate certificate;
  DiagonalizabilityCertificate diagonalizability;
  GroupPresentation presentation;
  HomologyReport homology;
  MappingTorusData mapping_torus;
  GeometricFlags flags;
  EigenData eigen;
  long bits = 0;
};

// Build everything; the two homology routes (direct Smith form of M - I and
// presentation abelianization) are both computed and must agree exactly.
std::variant<InoueDescriptor, Rejection> build_descriptor(const IntMatrix& m, long bits);

GeometricFlags derive_flags(const TypeICertificate& cert,
                            const DiagonalizabilityCertificate& diag);

// A point of H x C^n with Im w > 0 certified by its enclosure.
struct ActionPoint {
  DyadicComplexInterval w;
  std::vector<DyadicComplexInterval> z;

  ActionPoint(DyadicComplexInterval w_in, std::vector<DyadicComplexInterval> z_in);
};

// Action of the generators on H x C^n: g_0 (w, z) = (alpha w, R^T z) and
// g_i (w, z) = (w, z) + u_i. Exponent -1 applies the inverse map. The image
// must keep Im w certifiably positive, otherwise precision_exhausted.
ActionPoint apply_generator(const InoueDescriptor& desc, int generator, const ActionPoint& p,
                            int exponent = 1);
ActionPoint apply_word(const InoueDescriptor& desc, const std::vector<std::pair<int, int>>& word,
                       const ActionPoint& p);

// Interval verification of the defining relation g_0 g_i g_0^{-1} =
// g_1^{m_i1} ... g_{2n+1}^{m_i,2n+1} at a sample point: both sides are
// evaluated with tight enclosures, then padded to a common radius 2^-bits,
// after which overlap and mutual midpoint containment are checked.
struct RelationCheck {
  bool overlap = false;
  bool lhs_contains_rhs_midpoint = false;
  bool rhs_contains_lhs_midpoint = false;
  bool all_ok() const { return overlap && lhs_contains_rhs_midpoint && rhs_contains_lhs_midpoint; }
};

RelationCheck check_group_relation(const InoueDescriptor& desc, int i, const ActionPoint& p);

// The semidirect-product model Z x| Z^{2n+1}: the Z-action is by M^T, and
// the quotient is the mapping torus of M^T with fiber T^{2n+1}.
struct SemidirectData {
  IntMatrix action; // M^T
  SemidirectType type;
  int fiber_dim;
};

SemidirectData semidirect_data(const IntMatrix& m);

} // namespace inoue
