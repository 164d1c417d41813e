#include <doctest.h>

#include "inoue/factor.hpp"
#include "inoue/int_poly.hpp"
#include "inoue/search.hpp"

using namespace inoue;

namespace {

IntPoly P(std::initializer_list<long> coeffs_low_first) {
  std::vector<Int> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntPoly random_poly(SplitMix64& rng, int max_deg, long bound) {
  int d = static_cast<int>(rng.next_in(0, max_deg));
  std::vector<Int> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = rng.next_in(-bound, bound);
  IntPoly p(std::move(c));
  return p.is_zero() ? IntPoly::constant(1) : p;
}

} // namespace

TEST_CASE("arithmetic basics") {
  IntPoly f = P({-1, 0, -1, 1}); // x^3 - x^2 - 1
  CHECK(f.degree() == 3);
  CHECK(f.is_monic());
  CHECK(f.eval(Int(2)) == 3);
  CHECK(f.eval(Rat(1, 2)) == Rat(-9, 8));
  CHECK((f * f).degree() == 6);
  CHECK(f.derivative() == P({0, -2, 3}));
  CHECK(f.to_string() == "x^3 - x^2 - 1");
}

TEST_CASE("exact division and monic divrem") {
  IntPoly f = P({-1, 0, -1, 1});
  IntPoly g = P({1, -1, 1}); // x^2 - x + 1
  IntPoly prod = f * g;
  CHECK(exact_div(prod, g) == f);
  IntPoly q, r;
  divrem_monic(prod + IntPoly::constant(7), g, q, r);
  CHECK(q == f);
  CHECK(r == IntPoly::constant(7));
}

TEST_CASE("squarefree part: stated cases") {
  IntPoly f = P({-1, 0, -1, 1});
  CHECK(squarefree_part(f) == f); // gcd(p, p') = 1 already

  IntPoly g = P({1, -1, 1});
  CHECK(squarefree_part(g * g) == g); // repeated factor drops to one copy

  IntPoly lin = P({-1, 1}); // x - 1
  CHECK(squarefree_part(lin * lin * lin) == lin);

  CHECK_THROWS_AS(squarefree_part(IntPoly::zero()), Error);
}

TEST_CASE("squarefree part property: p q^2 vs p q") {
  // squarefree_part(p q^2) == squarefree_part(p q) for coprime p, q.
  SplitMix64 rng(2024);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 40; ++trial) {
    IntPoly p = random_poly(rng, 4, 5);
    IntPoly q = random_poly(rng, 4, 5);
    if (p.degree() < 1 || q.degree() < 1) continue;
    if (poly_gcd(p, q).degree() != 0) continue;
    IntPoly lhs = squarefree_part(p * q * q);
    IntPoly rhs = squarefree_part(p * q);
    CHECK(lhs == rhs);
    ++done;
  }
  CHECK(done == 40);
}

TEST_CASE("yun decomposition reconstructs the primitive part") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    IntPoly a = random_poly(rng, 3, 4);
    IntPoly b = random_poly(rng, 2, 4);
    if (a.degree() < 1 || b.degree() < 1) continue;
    IntPoly p = a * b * b;
    auto dec = squarefree_decomposition(p);
    IntPoly rebuilt = IntPoly::constant(1);
    for (const auto& [fac, mult] : dec) rebuilt *= fac.pow(static_cast<unsigned>(mult));
    IntPoly target = p.primitive_part();
    CHECK((rebuilt == target || rebuilt == -target));
  }
}

TEST_CASE("factorization: products of known irreducibles") {
  IntPoly f = P({-1, 0, -1, 1});  // irreducible cubic
  IntPoly g = P({1, -1, 1});      // irreducible quadratic
  CHECK(is_irreducible(f));
  CHECK(is_irreducible(g));
  CHECK(!is_irreducible(f * g));

  auto fac = factorize(f * g * g);
  REQUIRE(fac.size() == 2);
  // poly_less sorts the quadratic first.
  CHECK(fac[0].first == g);
  CHECK(fac[0].second == 2);
  CHECK(fac[1].first == f);
  CHECK(fac[1].second == 1);
}

TEST_CASE("factorization: cyclotomic-style splits") {
  IntPoly x3m1 = P({-1, 0, 0, 1}); // x^3 - 1 = (x - 1)(x^2 + x + 1)
  auto fac = factorize(x3m1);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first == P({-1, 1}));
  CHECK(fac[1].first == P({1, 1, 1}));

  // x^4 - 1 exercises even degree and repeated recombination.
  IntPoly x4m1 = P({-1, 0, 0, 0, 1});
  auto fac4 = factorize(x4m1);
  REQUIRE(fac4.size() == 3);
  CHECK(fac4[0].first == P({-1, 1}));
  CHECK(fac4[1].first == P({1, 1}));
  CHECK(fac4[2].first == P({1, 0, 1}));
}

TEST_CASE("factorization: random products round-trip") {
  SplitMix64 rng(4242);
  std::vector<IntPoly> atoms = {
      P({-1, 0, -1, 1}), P({1, -1, 1}), P({1, 0, 1}), P({-1, -1, 0, 1}), P({2, 1}), P({1, 1}),
  };
  for (int trial = 0; trial < 20; ++trial) {
    IntPoly prod = IntPoly::constant(1);
    std::vector<int> mults(atoms.size(), 0);
    for (int pick = 0; pick < 3; ++pick) {
      std::size_t i = static_cast<std::size_t>(rng.next_in(0, static_cast<long>(atoms.size()) - 1));
      mults[i] += 1;
      prod *= atoms[i];
    }
    auto fac = factorize(prod);
    IntPoly rebuilt = IntPoly::constant(1);
    for (const auto& [q, m] : fac) rebuilt *= q.pow(static_cast<unsigned>(m));
    IntPoly target = prod.primitive_part();
    CHECK((rebuilt == target || rebuilt == -target));
    // Every reported factor is irreducible.
    for (const auto& [q, m] : fac) CHECK(is_irreducible(q));
  }
}

TEST_CASE("factorization: cases the modular degree screen cannot settle") {
  // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime,
  // so only the lift-and-recombine path can certify it.
  IntPoly sd = P({1, 0, -10, 0, 1});
  CHECK(is_irreducible(sd));
  CHECK(factorize(sd).size() == 1);

  // Three entangled quadratics whose modular factors recombine nontrivially.
  IntPoly tangle = P({-2, 0, 1}) * P({-3, 0, 1}) * P({-6, 0, 1});
  auto fac = factorize(tangle);
  REQUIRE(fac.size() == 3);
  CHECK(fac[0].first == P({-6, 0, 1}));
  CHECK(fac[1].first == P({-3, 0, 1}));
  CHECK(fac[2].first == P({-2, 0, 1}));
}

TEST_CASE("poly_less is a strict total order on small sets") {
  IntPoly a = P({1, 1});
  IntPoly b = P({2, 1});
  IntPoly c = P({1, 0, 1});
  CHECK(poly_less(a, b));
  CHECK(poly_less(b, c));
  CHECK(poly_less(a, c));
  CHECK(!poly_less(a, a));
}
