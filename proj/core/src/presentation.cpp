#include "inoue/presentation.hpp"

#include <sstream>

namespace inoue {

GroupPresentation inoue_presentation(const IntMatrix& m) {
  int k = m.dim();
  GroupPresentation pres;
  pres.generator_names.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) pres.generator_names.push_back("g" + std::to_string(i));

  // Commutators [g_i, g_j] for 1 <= i < j <= k, as g_i g_j = g_j g_i.
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      Word lhs, rhs;
      lhs.syllables = {{i, Int(1)}, {j, Int(1)}};
      rhs.syllables = {{j, Int(1)}, {i, Int(1)}};
      pres.relations.emplace_back(std::move(lhs), std::move(rhs));
    }
  // Conjugation relations: g_0 g_i g_0^-1 = prod_j g_j^{m_ij}.
  for (int i = 1; i <= k; ++i) {
    Word lhs, rhs;
    lhs.syllables = {{0, Int(1)}, {i, Int(1)}, {0, Int(-1)}};
    for (int j = 1; j <= k; ++j) rhs.syllables.push_back({j, m(i - 1, j - 1)});
    pres.relations.emplace_back(std::move(lhs), std::move(rhs));
  }
  return pres;
}

HomologyReport homology_from_matrix(const IntMatrix& m) {
  SNFResult snf = smith_normal_form(m - IntMatrix::identity(m.dim()));
  HomologyReport rep;
  rep.b1 = 1; // the free summand from the base circle
  for (const Int& d : snf.diagonal()) {
    if (d == 0)
      ++rep.b1;
    else if (d > 1) {
      rep.torsion.push_back(d);
      rep.total_torsion_order *= d;
    }
  }
  return rep;
}

HomologyReport abelianization(const GroupPresentation& pres) {
  int gens = pres.num_generators();
  int rels = static_cast<int>(pres.relations.size());
  IntMatrix rel(rels == 0 ? 1 : rels, gens); // zero row when there are no relations
  for (int r = 0; r < rels; ++r) {
    const auto& [lhs, rhs] = pres.relations[static_cast<std::size_t>(r)];
    for (const auto& [g, e] : lhs.syllables) rel(r, g) += e;
    for (const auto& [g, e] : rhs.syllables) rel(r, g) -= e;
  }
  SNFResult snf = smith_normal_form(rel);
  HomologyReport rep;
  int rank = 0;
  for (const Int& d : snf.diagonal()) {
    if (d != 0) {
      ++rank;
      if (d > 1) {
        rep.torsion.push_back(d);
        rep.total_torsion_order *= d;
      }
    }
  }
  rep.b1 = gens - rank;
  return rep;
}

std::string presentation_to_text(const GroupPresentation& pres) {
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : pres.generator_names) os << " " << g;
  os << "\n";
  auto word_str = [&](const Word& w) {
    if (w.syllables.empty()) return std::string("1");
    std::ostringstream ws;
    bool first = true;
    for (const auto& [g, e] : w.syllables) {
      if (!first) ws << " ";
      first = false;
      ws << pres.generator_names[static_cast<std::size_t>(g)];
      if (e != 1) ws << "^" << e.get_str();
    }
    return ws.str();
  };
  for (const auto& [lhs, rhs] : pres.relations)
    os << word_str(lhs) << " = " << word_str(rhs) << "\n";
  return os.str();
}

} // namespace inoue
