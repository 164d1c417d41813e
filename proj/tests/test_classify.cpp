#include <doctest.h>

#include "inoue/classify.hpp"
#include "inoue/lll.hpp"
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

IntMatrix random_unimodular(SplitMix64& rng, int dim, int ops) {
  IntMatrix c = IntMatrix::identity(dim);
  for (int t = 0; t < ops; ++t) {
    int i = static_cast<int>(rng.next_in(0, dim - 1));
    int j = static_cast<int>(rng.next_in(0, dim - 1));
    if (i == j) { --t; continue; }
    Int f = rng.next_in(-2, 2);
    for (int k = 0; k < dim; ++k) c(i, k) += f * c(j, k);
  }
  return c;
}

bool fingerprints_equal(const ConjugacyFingerprint& a, const ConjugacyFingerprint& b) {
  return a.char_polynomial == b.char_polynomial && a.snf_shifted == b.snf_shifted &&
         a.power_traces == b.power_traces && a.snf_powers == b.snf_powers;
}

} // namespace

TEST_CASE("fingerprint is invariant under conjugation (200 random pairs)") {
  SplitMix64 rng(616);
  int done = 0;
  while (done < 200) {
    int dim = static_cast<int>(rng.next_in(2, 5));
    IntMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a(i, j) = rng.next_in(-9, 9);
    IntMatrix c = random_unimodular(rng, dim, 4);
    IntMatrix conj = c * a * inverse_unimodular(c);
    CHECK(fingerprints_equal(fingerprint(a), fingerprint(conj)));
    ++done;
  }
}

TEST_CASE("fingerprint: transpose invariance and separation by char poly") {
  IntMatrix a = IntMatrix::companion(f_cubic);
  CHECK(fingerprints_equal(fingerprint(a), fingerprint(a.transpose())));

  IntMatrix b = IntMatrix::companion(P({-1, 0, -3, 1}));
  CHECK(!fingerprints_equal(fingerprint(a), fingerprint(b)));
}

TEST_CASE("decide_conjugacy: explicit conjugate pair is found and verified") {
  IntMatrix a = IntMatrix::companion(f_cubic);
  IntMatrix c{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  IntMatrix b = c * a * inverse_unimodular(c);
  ConjugacyVerdict verdict = decide_conjugacy(a, b, 1000000);
  REQUIRE(verdict.outcome == ConjugacyOutcome::conjugate_to);
  REQUIRE(verdict.witness.has_value());
  const IntMatrix& w = *verdict.witness;
  CHECK(det(w) == 1);
  CHECK(w * a * inverse_unimodular(w) == b);
}

TEST_CASE("decide_conjugacy: distinct characteristic polynomials") {
  IntMatrix a = IntMatrix::companion(f_cubic);
  IntMatrix b = IntMatrix::companion(P({-1, 0, -3, 1}));
  ConjugacyVerdict verdict = decide_conjugacy(a, b, 1000);
  CHECK(verdict.outcome == ConjugacyOutcome::distinct);
  CHECK(verdict.separating_invariant == "char_poly");
}

TEST_CASE("decide_conjugacy: A against its own inverse") {
  // With B = A^{-1}, the inverse target is A itself, so C = I witnesses
  // conjugate-to-inverse immediately.
  IntMatrix a = IntMatrix::companion(f_cubic);
  IntMatrix b = inverse_unimodular(a);
  ConjugacyVerdict verdict = decide_conjugacy(a, b, 50000);
  if (verdict.outcome != ConjugacyOutcome::unknown) {
    REQUIRE(verdict.outcome == ConjugacyOutcome::conjugate_to_inverse);
    REQUIRE(verdict.witness.has_value());
    CHECK(det(*verdict.witness) == 1);
    CHECK(*verdict.witness * a * inverse_unimodular(*verdict.witness) == a);
  }
}

TEST_CASE("decide_conjugacy rejects broken hypotheses") {
  IntMatrix has_one = IntMatrix::companion(P({-1, 0, 0, 1})); // eigenvalue 1
  IntMatrix good = IntMatrix::companion(f_cubic);
  CHECK_THROWS_AS((void)decide_conjugacy(good, has_one, 10), Error);
  IntMatrix det_neg = IntMatrix::companion(P({1, 0, -1, 1})); // det = -1
  CHECK_THROWS_AS((void)decide_conjugacy(det_neg, good, 10), Error);
}

TEST_CASE("homeo_verdict: direct pair, distinct pair, diagonal-type separation") {
  SplitMix64 rng(11);
  IntMatrix a = IntMatrix::companion(f_cubic);
  IntMatrix c = random_unimodular(rng, 3, 5);
  IntMatrix b = c * a * inverse_unimodular(c);
  HomeoVerdict direct = homeo_verdict(a, b, 1000000);
  CHECK(direct.outcome == HomeoOutcome::homeomorphic);
  CHECK(direct.map_kind == HomeoMapKind::direct);
  REQUIRE(direct.witness.has_value());
  CHECK(det(*direct.witness) == 1);

  HomeoVerdict distinct = homeo_verdict(a, IntMatrix::companion(P({-1, 0, -3, 1})), 1000);
  CHECK(distinct.outcome == HomeoOutcome::not_homeomorphic);
  CHECK(distinct.obstruction.find("char_poly") != std::string::npos);

  // Same characteristic polynomial f g^2, different minimal polynomial:
  // block(C_f, C_{g^2}) vs block(C_f, C_g, C_g). Separated by diagonal type.
  IntMatrix nd = IntMatrix::block_diag({IntMatrix::companion(f_cubic), IntMatrix::companion(g_quad * g_quad)});
  IntMatrix dd = IntMatrix::block_diag(
      {IntMatrix::companion(f_cubic), IntMatrix::companion(g_quad), IntMatrix::companion(g_quad)});
  CHECK(char_poly(nd) == char_poly(dd));
  HomeoVerdict split = homeo_verdict(nd, dd, 1000);
  CHECK(split.outcome == HomeoOutcome::not_homeomorphic);
  CHECK(split.conjugacy.separating_invariant == "diagonal-type");
}

TEST_CASE("semidirect_type: stated cases and conjugation invariance") {
  CHECK(semidirect_type(IntMatrix::companion(f_cubic)) == SemidirectType::diagonal);
  IntMatrix nd = IntMatrix::block_diag({IntMatrix::companion(f_cubic), IntMatrix::companion(g_quad * g_quad)});
  CHECK(semidirect_type(nd) == SemidirectType::non_diagonal);
  CHECK(semidirect_type(IntMatrix::companion(P({-1, 0, 0, 1}))) == SemidirectType::has_eigenvalue_one);

  SplitMix64 rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    IntMatrix c = random_unimodular(rng, 7, 5);
    IntMatrix conj = c * nd * inverse_unimodular(c);
    CHECK(semidirect_type(conj) == SemidirectType::non_diagonal);
  }
}

TEST_CASE("ot_exclusion: excluded for non-diagonalizable, possible otherwise") {
  IntMatrix nd = IntMatrix::block_diag({IntMatrix::companion(f_cubic), IntMatrix::companion(g_quad * g_quad)});
  OtExclusion ex = ot_exclusion(nd);
  CHECK(ex.excluded);
  CHECK(ex.reasons.size() == 3);

  OtExclusion ok1 = ot_exclusion(IntMatrix::companion(f_cubic));
  CHECK(!ok1.excluded);
  OtExclusion ok2 = ot_exclusion(IntMatrix::companion(P({-1, 0, -3, 1})));
  CHECK(!ok2.excluded);
}

TEST_CASE("LLL output spans the same lattice and is unimodularly related") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t r = static_cast<std::size_t>(rng.next_in(2, 4));
    std::size_t dim = static_cast<std::size_t>(rng.next_in(static_cast<long>(r), 6));
    std::vector<std::vector<Int>> basis(r, std::vector<Int>(dim));
    for (auto& v : basis)
      for (auto& x : v) x = rng.next_in(-20, 20);
    // Skip degenerate draws.
    IntMatrix probe(static_cast<int>(r), static_cast<int>(dim));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < dim; ++j) probe(static_cast<int>(i), static_cast<int>(j)) = basis[i][j];
    if (static_cast<std::size_t>(probe.rows()) != r) continue;
    auto original = basis;
    auto transform = lll_reduce(basis);
    // new = T * old with T unimodular.
    IntMatrix t(static_cast<int>(r), static_cast<int>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) t(static_cast<int>(i), static_cast<int>(j)) = transform[i][j];
    Int dt = det(t);
    CHECK((dt == 1 || dt == -1));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        Int acc = 0;
        for (std::size_t j = 0; j < r; ++j) acc += transform[i][j] * original[j][k];
        CHECK(acc == basis[i][k]);
      }
  }
}

TEST_CASE("odd-dimension sign fix: negating a det = -1 witness works") {
  // Construct a situation where the enumerator will meet det = -1 first:
  // conjugate by a matrix C0 with det C0 = -1; then every solution of
  // C A = B C is a multiple of C0 over Q, and the shell search hits a
  // det = -1 candidate whose negation must be accepted.
  IntMatrix a = IntMatrix::companion(f_cubic);
  IntMatrix c0{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  IntMatrix c0_inv = c0; // self inverse
  IntMatrix b = c0 * a * c0_inv;
  ConjugacyVerdict verdict = decide_conjugacy(a, b, 1000000);
  REQUIRE(verdict.outcome == ConjugacyOutcome::conjugate_to);
  REQUIRE(verdict.witness.has_value());
  CHECK(det(*verdict.witness) == 1);
  CHECK(*verdict.witness * a * inverse_unimodular(*verdict.witness) == b);
}
