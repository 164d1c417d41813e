#pragma once

#include <string>
#include <utility>
#include <vector>

#include "inoue/int_matrix.hpp"

namespace inoue {

// Word in the generators: sequence of (generator index, exponent).
struct Word {
  std::vector<std::pair<int, Int>> syllables;
};

// Finite presentation with relations stored as equalities lhs = rhs, which
// keeps the printed form close to how the relations read.
struct GroupPresentation {
  std::vector<std::string> generator_names;
  std::vector<std::pair<Word, Word>> relations;

  int num_generators() const { return static_cast<int>(generator_names.size()); }
};

// The fundamental-group presentation of the mapping-torus construction:
// generators g_0 .. g_{2n+1}; commutators [g_i, g_j] = 1 for i < j >= 1 and
// g_0 g_i g_0^{-1} = g_1^{m_i1} ... g_{2n+1}^{m_i,2n+1}, exponents read off
// the rows of M.
GroupPresentation inoue_presentation(const IntMatrix& m);

struct HomologyReport {
  int b1 = 0;
  std::vector<Int> torsion; // invariant factors > 1, divisibility order
  Int total_torsion_order{1};

  bool operator==(const HomologyReport& o) const {
    return b1 == o.b1 && torsion == o.torsion && total_torsion_order == o.total_torsion_order;
  }
};

// H_1 of the mapping torus straight from M: Z (+) coker(M - I) via the Smith
// normal form of M - I.
HomologyReport homology_from_matrix(const IntMatrix& m);

// H_1 from an arbitrary presentation by abelianizing the relations.
HomologyReport abelianization(const GroupPresentation& pres);

// The documented plain-text relation syntax, e.g.
// "g0 g1 g0^-1 = g1^2 g2^-1 g3^0".
std::string presentation_to_text(const GroupPresentation& pres);

} // namespace inoue
