#include <doctest.h>

#include "inoue/ot_bridge.hpp"
#include "inoue/search.hpp"

using namespace inoue;

namespace {

IntPoly P(std::initializer_list<long> coeffs_low_first) {
  std::vector<Int> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return IntPoly(std::move(c));
}

const IntPoly surface_poly = P({-1, 0, -1, 1});   // x^3 - x^2 - 1
const IntPoly torsion_poly = P({-1, 0, -3, 1});   // x^3 - 3x^2 - 1

} // namespace

TEST_CASE("validate_unit_poly: stated gate cases") {
  auto ok = validate_unit_poly(surface_poly);
  REQUIRE(std::holds_alternative<UnitPolyCertificate>(ok));
  const auto& cert = std::get<UnitPolyCertificate>(ok);
  CHECK(cert.n == 1);
  CHECK(cert.degree == 3);

  auto red = validate_unit_poly(P({-1, 0, 0, 1})); // x^3 - 1 reducible
  REQUIRE(std::holds_alternative<UnitPolyRejection>(red));
  CHECK(std::get<UnitPolyRejection>(red) == UnitPolyRejection::reducible);

  auto unit = validate_unit_poly(P({1, 0, -1, 1})); // P(0) = +1
  REQUIRE(std::holds_alternative<UnitPolyRejection>(unit));
  CHECK(std::get<UnitPolyRejection>(unit) == UnitPolyRejection::constant_term_not_minus_one);

  auto even = validate_unit_poly(P({-1, 0, 1})); // degree 2
  REQUIRE(std::holds_alternative<UnitPolyRejection>(even));
  CHECK(std::get<UnitPolyRejection>(even) == UnitPolyRejection::degree_not_odd_or_too_small);

  auto nonmonic = validate_unit_poly(P({-1, 0, 0, 2}));
  REQUIRE(std::holds_alternative<UnitPolyRejection>(nonmonic));
  CHECK(std::get<UnitPolyRejection>(nonmonic) == UnitPolyRejection::not_monic);
}

TEST_CASE("companion_transpose: stated cases and determinant identity") {
  IntMatrix d = companion_transpose(surface_poly);
  IntMatrix expected = IntMatrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 1}}).transpose();
  CHECK(d == expected);

  IntMatrix one = companion_transpose(P({-1, 1})); // x - 1
  CHECK(one.dim() == 1);
  CHECK(one(0, 0) == 1);

  IntMatrix quad = companion_transpose(P({1, 0, 1})); // x^2 + 1
  CHECK(char_poly(quad) == P({1, 0, 1}));
}

TEST_CASE("char_poly(companion_transpose(P)) = P for random monic P up to degree 15") {
  SplitMix64 rng(88);
  for (int trial = 0; trial < 20; ++trial) {
    int d = static_cast<int>(rng.next_in(1, 15));
    std::vector<Int> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = rng.next_in(-9, 9);
    c[static_cast<std::size_t>(d)] = 1;
    IntPoly p(std::move(c));
    CHECK(char_poly(companion_transpose(p)) == p);
    // det(companion) = (-1)^deg P(0).
    Int expected_det = (d % 2 == 0) ? p.coeff(0) : -p.coeff(0);
    CHECK(det(IntMatrix::companion(p)) == expected_det);
  }
}

TEST_CASE("ot_data: Vandermonde lattice rows for the surface polynomial") {
  OTFieldData data = ot_data(surface_poly, 96);
  CHECK(data.s == 1);
  CHECK(data.t == 1);
  REQUIRE(data.lattice_rows.size() == 3);
  // Row 0 is all ones.
  CHECK(data.lattice_rows[0][0].re.contains(Rat(1)));
  CHECK(data.lattice_rows[0][1].re.contains(Rat(1)));
  CHECK(data.lattice_rows[0][1].im.contains(Rat(0)));
  // Row 1 is (alpha, beta).
  CHECK(data.lattice_rows[1][0].re.intersects(data.alpha));
  CHECK(data.lattice_rows[1][1].intersects(data.betas[0]));
  // alpha enclosure near the oracle.
  CHECK(data.alpha.c.to_double() == doctest::Approx(1.4655712319).epsilon(1e-9));
}

TEST_CASE("ot_data row 0 is all ones for any accepted polynomial") {
  for (const IntPoly& p : {surface_poly, torsion_poly}) {
    OTFieldData data = ot_data(p, 64);
    for (const auto& entry : data.lattice_rows[0]) {
      CHECK(entry.re.contains(Rat(1)));
      CHECK(entry.im.contains(Rat(0)));
    }
  }
}

TEST_CASE("correspondence_report: full pass for the two stated polynomials") {
  for (const IntPoly& p : {surface_poly, torsion_poly}) {
    auto res = correspondence_report(p, 96);
    REQUIRE(std::holds_alternative<CorrespondenceReport>(res));
    const auto& rep = std::get<CorrespondenceReport>(res);
    CHECK(rep.diagonalizable);
    CHECK(rep.r_diagonal_matches);
    CHECK(rep.lattice_matches_u_rows);
    CHECK(rep.type_I.n == rep.unit.n);
  }
}

TEST_CASE("correspondence_report: |beta|^2 = 1/alpha within enclosures (product of roots)") {
  auto res = correspondence_report(torsion_poly, 96);
  const auto& rep = std::get<CorrespondenceReport>(res);
  // alpha |beta|^2 = product of all roots = -P(0) = 1.
  DyadicInterval prod = mul(norm_sq(rep.ot.betas[0], 160), rep.ot.alpha, 160);
  CHECK(prod.contains(Rat(1)));
}

TEST_CASE("correspondence_report gate: rejection propagates with no claim") {
  IntPoly p = P({-1, 1, -1, -1, -1, 1}); // x^5 - x^4 - x^3 - x^2 + x - 1
  auto validated = validate_unit_poly(p);
  auto res = correspondence_report(p, 64);
  if (std::holds_alternative<UnitPolyRejection>(validated)) {
    REQUIRE(std::holds_alternative<UnitPolyRejection>(res));
    CHECK(std::get<UnitPolyRejection>(res) == std::get<UnitPolyRejection>(validated));
  } else {
    REQUIRE(std::holds_alternative<CorrespondenceReport>(res));
    CHECK(std::get<CorrespondenceReport>(res).lattice_matches_u_rows);
  }
}

TEST_CASE("degree-5 units: two conjugate pairs, and a reducible rejection") {
  // x^5 - x^3 - 1 and x^5 - x^2 - 1 generate degree-5 fields with one real
  // embedding; the correspondence runs with n = 2.
  for (const IntPoly& p : {P({-1, 0, 0, -1, 0, 1}), P({-1, 0, -1, 0, 0, 1})}) {
    auto res = correspondence_report(p, 96);
    REQUIRE(std::holds_alternative<CorrespondenceReport>(res));
    const auto& rep = std::get<CorrespondenceReport>(res);
    CHECK(rep.unit.n == 2);
    CHECK(rep.lattice_matches_u_rows);
    CHECK(rep.r_diagonal_matches);
  }
  // x^5 - x^4 - 1 = (x^2 - x + 1)(x^3 - x - 1): the gate must say reducible.
  auto rejected = validate_unit_poly(P({-1, 0, 0, 0, -1, 1}));
  REQUIRE(std::holds_alternative<UnitPolyRejection>(rejected));
  CHECK(std::get<UnitPolyRejection>(rejected) == UnitPolyRejection::reducible);
}

TEST_CASE("eigen u-rows equal lattice rows within combined enclosures") {
  for (const IntPoly& p : {surface_poly, torsion_poly}) {
    auto res = correspondence_report(p, 80);
    const auto& rep = std::get<CorrespondenceReport>(res);
    for (int i = 0; i < rep.type_I.dim; ++i) {
      auto u = rep.eigen.u_column(i);
      const auto& row = rep.ot.lattice_rows[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < u.size(); ++j) CHECK(u[j].intersects(row[j]));
    }
    // Diagonalizability is forced by irreducibility.
    CHECK(is_diagonalizable(rep.D).diagonalizable);
  }
}
