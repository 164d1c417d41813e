#include <doctest.h>

#include <algorithm>

#include "inoue/roots.hpp"
#include "inoue/search.hpp"
#include "oracles.hpp"

using namespace inoue;

namespace {

IntPoly P(std::initializer_list<long> coeffs_low_first) {
  std::vector<Int> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("sturm_count: stated cases") {
  CHECK(sturm_count(P({-1, 0, -1, 1}), Rat(0), Rat(2)) == 1);   // x^3 - x^2 - 1
  CHECK(sturm_count(P({1, 0, 1}), Rat(-10), Rat(10)) == 0);     // x^2 + 1
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  CHECK(sturm_count(P({-6, 11, -6, 1}), Rat(0), Rat(10)) == 3);
}

TEST_CASE("sturm_count: endpoint root raises the dedicated error") {
  try {
    sturm_count(P({-6, 11, -6, 1}), Rat(1), Rat(10));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::endpoint_is_root);
  }
}

TEST_CASE("isolate_real_roots: stated cases") {
  auto iso1 = isolate_real_roots(P({-1, 0, -1, 1}));
  REQUIRE(iso1.size() == 1);
  CHECK(iso1.front().lo >= Rat(1));
  CHECK(iso1.front().hi <= Rat(2));
  CHECK(iso1.front().multiplicity == 1);

  auto iso2 = isolate_real_roots(P({-1, 0, -3, 1})); // x^3 - 3x^2 - 1
  REQUIRE(iso2.size() == 1);
  CHECK(iso2.front().lo >= Rat(3));
  CHECK(iso2.front().hi <= Rat(4));

  auto iso3 = isolate_real_roots(P({1, 0, 1}) * P({2, 0, 1}));
  CHECK(iso3.empty());
}

TEST_CASE("refine_real: oracle values and widths") {
  IntPoly f = P({-1, 0, -1, 1});
  auto iso = isolate_real_roots(f);
  REQUIRE(iso.size() == 1);
  DyadicInterval root = refine_real(f, iso.front(), 20);
  CHECK(root.width().to_rat() <= Rat(1, pow2(20)));
  // Independent numeric oracle near 1.4655712319.
  double approx = oracle::real_root_near(f, 1.0, 2.0);
  CHECK(approx == doctest::Approx(1.4655712319).epsilon(1e-9));
  CHECK(root.lo().to_double() <= approx + 1e-9);
  CHECK(root.hi().to_double() >= approx - 1e-9);

  IntPoly g = P({-1, 0, -3, 1});
  auto iso_g = isolate_real_roots(g);
  DyadicInterval root_g = refine_real(g, iso_g.front(), 20);
  double approx_g = oracle::real_root_near(g, 3.0, 4.0);
  CHECK(approx_g == doctest::Approx(3.1038034).epsilon(1e-7));
  CHECK(root_g.width().to_rat() <= Rat(1, pow2(20)));
  CHECK(root_g.lo().to_double() <= approx_g + 1e-7);
  CHECK(root_g.hi().to_double() >= approx_g - 1e-7);
}

TEST_CASE("refine_real: exact point for x - 1") {
  IntPoly f = P({-1, 1});
  auto iso = isolate_real_roots(f);
  REQUIRE(iso.size() == 1);
  DyadicInterval root = refine_real(f, iso.front(), 10);
  CHECK(root.is_exact());
  CHECK(root.c.to_rat() == Rat(1));
}

TEST_CASE("refine_real monotonicity: more bits nest inside fewer bits") {
  IntPoly f = P({-1, 0, -1, 1});
  auto iso = isolate_real_roots(f).front();
  for (long bits : {16L, 24L, 48L, 96L}) {
    DyadicInterval coarse = refine_real(f, iso, bits);
    DyadicInterval fine = refine_real(f, iso, bits + 8);
    CHECK(coarse.contains_interval(fine));
  }
}

TEST_CASE("enclose_complex_roots: stated cases") {
  // x^2 - x + 1: roots (1 +- i sqrt(3))/2.
  auto boxes = enclose_complex_roots(P({1, -1, 1}), 40);
  REQUIRE(boxes.size() == 2);
  for (const auto& b : boxes) {
    CHECK(!b.is_real_root());
    CHECK(Rat(1, 2) >= b.re_lo);
    CHECK(Rat(1, 2) <= b.re_hi);
  }
  double im_oracle = std::sqrt(3.0) / 2; // 0.8660254...
  std::vector<double> ims;
  for (const auto& b : boxes) ims.push_back((b.im_lo.get_d() + b.im_hi.get_d()) / 2);
  std::sort(ims.begin(), ims.end());
  CHECK(ims[0] == doctest::Approx(-im_oracle).epsilon(1e-9));
  CHECK(ims[1] == doctest::Approx(im_oracle).epsilon(1e-9));

  // x^3 - x^2 - 1: one real box and a conjugate pair near -0.2328 +- 0.7926i
  // (sum of roots is 1, so the pair's real part is (1 - alpha)/2 < 0).
  auto boxes3 = enclose_complex_roots(P({-1, 0, -1, 1}), 40);
  REQUIRE(boxes3.size() == 3);
  int real_count = 0;
  for (const auto& b : boxes3) {
    if (b.is_real_root()) {
      ++real_count;
      CHECK(b.re_lo.get_d() == doctest::Approx(1.4655712319).epsilon(1e-6));
    } else {
      CHECK(std::abs(b.re_lo.get_d() - (-0.2327856159)) < 1e-3);
      CHECK(std::abs(std::abs(b.im_lo.get_d()) - 0.7925519925) < 1e-3);
    }
  }
  CHECK(real_count == 1);

  // (x^2 + 1)^2: boxes at +-i with multiplicity 2.
  IntPoly q = P({1, 0, 1});
  auto boxes4 = enclose_complex_roots(q * q, 40);
  REQUIRE(boxes4.size() == 2);
  for (const auto& b : boxes4) {
    CHECK(b.multiplicity == 2);
    CHECK(b.re_lo <= Rat(0));
    CHECK(b.re_hi >= Rat(0));
    CHECK((b.im_lo.get_d() == doctest::Approx(1.0).epsilon(1e-9) ||
           b.im_hi.get_d() == doctest::Approx(-1.0).epsilon(1e-9)));
  }
}

TEST_CASE("enclose_complex_roots: conjugate boxes are exact mirrors") {
  auto boxes = enclose_complex_roots(P({-1, 0, -1, 1}), 48);
  std::vector<ComplexBox> upper, lower;
  for (const auto& b : boxes) {
    if (b.im_lo > 0) upper.push_back(b);
    if (b.im_hi < 0) lower.push_back(b);
  }
  REQUIRE(upper.size() == 1);
  REQUIRE(lower.size() == 1);
  CHECK(upper[0].re_lo == lower[0].re_lo);
  CHECK(upper[0].re_hi == lower[0].re_hi);
  CHECK(upper[0].im_lo == -lower[0].im_hi);
  CHECK(upper[0].im_hi == -lower[0].im_lo);
}

TEST_CASE("random factor products: counts, multiplicity sums, disjointness") {
  SplitMix64 rng(31);
  std::vector<IntPoly> atoms = {
      P({-1, 1}), P({-2, 1}), P({1, 1}), P({3, 1}),       // linear
      P({1, -1, 1}), P({1, 0, 1}), P({2, 2, 1}), P({5, -4, 1}), // quadratics
  };
  for (int trial = 0; trial < 12; ++trial) {
    IntPoly prod = IntPoly::constant(1);
    int expected_distinct_real = 0;
    std::vector<std::size_t> picked;
    for (int pick = 0; pick < 3; ++pick) {
      std::size_t i = static_cast<std::size_t>(rng.next_in(0, static_cast<long>(atoms.size()) - 1));
      picked.push_back(i);
      prod *= atoms[i];
    }
    if (prod.degree() > 8) continue;
    // Count expected distinct roots through the oracle metadata.
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    int expected_distinct = 0;
    for (std::size_t i : picked) {
      const IntPoly& a = atoms[i];
      expected_distinct += a.degree();
      bool real_quadratic = a.degree() == 2 && a.coeff(1) * a.coeff(1) - 4 * a.coeff(0) * a.coeff(2) > 0;
      if (a.degree() == 1 || real_quadratic) expected_distinct_real += a.degree();
    }
    auto reals = isolate_real_roots(prod);
    CHECK(static_cast<int>(reals.size()) == expected_distinct_real);
    auto boxes = enclose_complex_roots(prod, 40);
    CHECK(static_cast<int>(boxes.size()) == expected_distinct);
    // Multiplicities over distinct roots sum to the full degree.
    int total = 0;
    for (const auto& b : boxes) total += b.multiplicity;
    CHECK(total == prod.degree());
    // Each known rational root (from the linear factors) lies in exactly
    // one isolating interval and one box.
    for (std::size_t i : picked) {
      const IntPoly& a = atoms[i];
      if (a.degree() != 1) continue;
      Rat root(-a.coeff(0), a.coeff(1));
      root.canonicalize();
      int in_intervals = 0, in_boxes = 0;
      for (const auto& r : reals)
        if (r.lo < root && root < r.hi) ++in_intervals;
      for (const auto& b : boxes)
        if (b.is_real_root() && b.re_lo <= root && root <= b.re_hi) ++in_boxes;
      CHECK(in_intervals == 1);
      CHECK(in_boxes == 1);
    }
  }
}

TEST_CASE("sturm over the root bound counts all distinct real roots") {
  SplitMix64 rng(32);
  std::vector<IntPoly> atoms = {P({-1, 1}), P({7, 1}), P({1, -1, 1}), P({-3, 0, 1})};
  for (int trial = 0; trial < 10; ++trial) {
    IntPoly prod = IntPoly::constant(1);
    for (int pick = 0; pick < 2; ++pick)
      prod *= atoms[static_cast<std::size_t>(rng.next_in(0, 3))];
    IntPoly sf = squarefree_part(prod);
    SturmChain chain(sf);
    CHECK(chain.count_all() == static_cast<int>(isolate_real_roots(prod).size()));
  }
}
