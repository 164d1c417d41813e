#include <doctest.h>

#include "inoue/descriptor.hpp"
#include "inoue/search.hpp"

using namespace inoue;

namespace {

IntPoly P(std::initializer_list<long> coeffs_low_first) {
  std::vector<Int> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return IntPoly(std::move(c));
}

const IntPoly f_cubic = P({-1, 0, -1, 1});
const IntPoly g_quad = P({1, -1, 1});

InoueDescriptor build(const IntMatrix& m, long bits = 64) {
  auto res = build_descriptor(m, bits);
  REQUIRE(std::holds_alternative<InoueDescriptor>(res));
  return std::get<InoueDescriptor>(std::move(res));
}

ActionPoint base_point(const InoueDescriptor& desc) {
  // (i, 0, ..., 0)
  std::vector<DyadicComplexInterval> z(static_cast<std::size_t>(desc.eigen.n));
  return ActionPoint(DyadicComplexInterval::exact_point(Dyadic(), Dyadic::from_int(1)), std::move(z));
}

bool points_overlap(const ActionPoint& a, const ActionPoint& b) {
  if (!a.w.intersects(b.w)) return false;
  for (std::size_t i = 0; i < a.z.size(); ++i)
    if (!a.z[i].intersects(b.z[i])) return false;
  return true;
}

} // namespace

TEST_CASE("presentation shape: counts and exponent rows") {
  IntMatrix m = IntMatrix::companion(f_cubic);
  GroupPresentation pres = inoue_presentation(m);
  int k = 3;
  CHECK(pres.num_generators() == k + 1);
  CHECK(static_cast<int>(pres.relations.size()) == k * (k - 1) / 2 + k);
  // The conjugation relation for g_i carries row i of M as exponents.
  const auto& [lhs, rhs] = pres.relations.back(); // g_3 relation
  CHECK(lhs.syllables.size() == 3);
  REQUIRE(rhs.syllables.size() == 3);
  for (int j = 0; j < 3; ++j) CHECK(rhs.syllables[static_cast<std::size_t>(j)].second == m(2, j));
}

TEST_CASE("presentation text uses the documented syntax") {
  IntMatrix m = IntMatrix::companion(f_cubic);
  std::string text = presentation_to_text(inoue_presentation(m));
  CHECK(text.find("g1 g2 = g2 g1") != std::string::npos);
  CHECK(text.find("g0 g1 g0^-1 =") != std::string::npos);
}

TEST_CASE("homology: stated cases") {
  HomologyReport h1 = homology_from_matrix(IntMatrix::companion(f_cubic));
  CHECK(h1.b1 == 1);
  CHECK(h1.torsion.empty());
  CHECK(h1.total_torsion_order == 1);

  HomologyReport h2 = homology_from_matrix(IntMatrix::companion(P({-1, 0, -3, 1})));
  CHECK(h2.b1 == 1);
  REQUIRE(h2.torsion.size() == 1);
  CHECK(h2.torsion.front() == 3);
  CHECK(h2.total_torsion_order == 3);
}

TEST_CASE("abelianization: stated cases incl. free abelian sanity") {
  HomologyReport a1 = abelianization(inoue_presentation(IntMatrix::companion(f_cubic)));
  CHECK(a1.b1 == 1);
  CHECK(a1.torsion.empty());

  HomologyReport a2 = abelianization(inoue_presentation(IntMatrix::companion(P({-1, 0, -3, 1}))));
  CHECK(a2.b1 == 1);
  REQUIRE(a2.torsion.size() == 1);
  CHECK(a2.torsion.front() == 3);

  // Z^2 presented as <a, b | ab = ba>.
  GroupPresentation free_ab;
  free_ab.generator_names = {"a", "b"};
  Word lhs, rhs;
  lhs.syllables = {{0, Int(1)}, {1, Int(1)}};
  rhs.syllables = {{1, Int(1)}, {0, Int(1)}};
  free_ab.relations.emplace_back(lhs, rhs);
  HomologyReport a3 = abelianization(free_ab);
  CHECK(a3.b1 == 2);
  CHECK(a3.torsion.empty());
}

TEST_CASE("Milnor consistency: both homology routes agree on random type-I input") {
  for (int dim : {3, 5}) {
    SearchConfig cfg;
    cfg.dim = dim;
    cfg.count = 25;
    cfg.seed = 900 + static_cast<std::uint64_t>(dim);
    cfg.mode = SearchMode::companion;
    auto outcome = search_type_I(cfg);
    REQUIRE(static_cast<int>(outcome.hits.size()) == 25);
    for (const auto& hit : outcome.hits) {
      HomologyReport direct = homology_from_matrix(hit.matrix);
      HomologyReport from_pres = abelianization(inoue_presentation(hit.matrix));
      CHECK(direct == from_pres);
      CHECK(direct.b1 == 1);
    }
  }
}

TEST_CASE("torsion order equals |chi(1)| for companion matrices") {
  SearchConfig cfg;
  cfg.dim = 5;
  cfg.count = 15;
  cfg.seed = 31337;
  cfg.mode = SearchMode::companion;
  auto outcome = search_type_I(cfg);
  for (const auto& hit : outcome.hits) {
    Int chi1 = char_poly(hit.matrix).eval(Int(1));
    CHECK(homology_from_matrix(hit.matrix).total_torsion_order == abs(chi1));
  }
}

TEST_CASE("build_descriptor: flags for the three stated cases") {
  InoueDescriptor d1 = build(IntMatrix::companion(f_cubic));
  CHECK(d1.homology.b1 == 1);
  CHECK(d1.homology.torsion.empty());
  CHECK(!d1.flags.kahler);
  CHECK(d1.flags.kodaira_minus_infinity);
  CHECK(d1.flags.lck == LckFlag::exists_by_tricerri);
  CHECK(d1.flags.ot_homeomorphic == OtFlag::possible);
  CHECK(d1.mapping_torus.fiber_dim == 3);
  CHECK(d1.mapping_torus.monodromy == d1.M.transpose());

  InoueDescriptor d2 = build(IntMatrix::companion(P({-1, 0, -3, 1})));
  REQUIRE(d2.homology.torsion.size() == 1);
  CHECK(d2.homology.torsion.front() == 3);

  IntMatrix m3 = IntMatrix::block_diag(
      {IntMatrix::companion(f_cubic), IntMatrix::companion(g_quad * g_quad)});
  InoueDescriptor d3 = build(m3);
  CHECK(!d3.flags.kahler);
  CHECK(d3.flags.lck == LckFlag::obstructed);
  CHECK(d3.flags.ot_homeomorphic == OtFlag::excluded);
}

TEST_CASE("build_descriptor propagates rejections") {
  auto res = build_descriptor(IntMatrix::identity(3), 64);
  REQUIRE(std::holds_alternative<Rejection>(res));
}

TEST_CASE("flags depend on the certificates only") {
  IntMatrix m = IntMatrix::companion(f_cubic);
  auto cert = std::get<TypeICertificate>(check_type_I(m));
  auto diag = is_diagonalizable(m);
  GeometricFlags f1 = derive_flags(cert, diag);
  GeometricFlags f2 = derive_flags(cert, diag);
  CHECK(f1.lck == f2.lck);
  CHECK(f1.ot_homeomorphic == f2.ot_homeomorphic);
  CHECK(f1.kahler == f2.kahler);
}

TEST_CASE("apply_generator: g0 scales Im w by alpha") {
  InoueDescriptor desc = build(IntMatrix::companion(f_cubic), 96);
  ActionPoint p = base_point(desc);
  ActionPoint image = apply_generator(desc, 0, p);
  // Im(alpha * i) = alpha ~ 1.4655712319.
  CHECK(image.w.im.contains_interval(desc.eigen.alpha));
  CHECK(image.w.re.contains(Rat(0)));
  ActionPoint back = apply_generator(desc, 0, image, -1);
  CHECK(points_overlap(back, p));
}

TEST_CASE("apply_generator: translation then inverse returns near the start") {
  InoueDescriptor desc = build(IntMatrix::companion(f_cubic), 96);
  ActionPoint p = base_point(desc);
  for (int i = 1; i <= 3; ++i) {
    ActionPoint there = apply_generator(desc, i, p);
    ActionPoint back = apply_generator(desc, i, there, -1);
    CHECK(points_overlap(back, p));
    // Translations leave Im w unchanged.
    CHECK(there.w.im.contains(Rat(1)));
  }
}

TEST_CASE("group relation g0 gi g0^-1 = product of gj^{m_ij} on sample points") {
  for (const IntMatrix& m : {IntMatrix::companion(f_cubic),
                             IntMatrix::companion(P({-1, 0, -3, 1}))}) {
    InoueDescriptor desc = build(m, 96);
    ActionPoint p = base_point(desc);
    int k = desc.certificate.dim;
    for (int i = 1; i <= k; ++i) {
      RelationCheck check = check_group_relation(desc, i, p);
      CHECK(check.overlap);
      CHECK(check.lhs_contains_rhs_midpoint);
      CHECK(check.rhs_contains_lhs_midpoint);
    }
  }
}

TEST_CASE("semidirect_data reports the transpose action and its type") {
  IntMatrix m = IntMatrix::companion(f_cubic);
  SemidirectData sd = semidirect_data(m);
  CHECK(sd.action == m.transpose());
  CHECK(sd.type == SemidirectType::diagonal);
  CHECK(sd.fiber_dim == 3);

  IntMatrix sym{{2, 1, 1}, {1, 1, 0}, {1, 0, 1}};
  if (det(sym) == 1) CHECK(semidirect_data(sym).action == sym);

  IntMatrix m3 = IntMatrix::block_diag(
      {IntMatrix::companion(f_cubic), IntMatrix::companion(g_quad * g_quad)});
  CHECK(semidirect_data(m3).type == SemidirectType::non_diagonal);
}
