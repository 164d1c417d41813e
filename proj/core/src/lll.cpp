#include "inoue/lll.hpp"

#include "inoue/errors.hpp"

namespace inoue {

namespace {

Rat dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return Rat(s);
}

} // namespace

std::vector<std::vector<Int>> lll_reduce(std::vector<std::vector<Int>>& basis) {
  const std::size_t k = basis.size();
  std::vector<std::vector<Int>> transform(k);
  for (std::size_t i = 0; i < k; ++i) {
    transform[i].assign(k, Int(0));
    transform[i][i] = 1;
  }
  if (k <= 1) return transform;
  const Rat delta(99, 100);

  // Rational Gram-Schmidt data, recomputed incrementally.
  std::vector<std::vector<Rat>> mu(k, std::vector<Rat>(k, Rat(0)));
  std::vector<Rat> Bnorm(k, Rat(0)); // squared lengths of the orthogonalized vectors

  auto recompute_gs = [&]() {
    std::vector<std::vector<Rat>> star(k);
    for (std::size_t i = 0; i < k; ++i) {
      star[i].assign(basis[i].size(), Rat(0));
      for (std::size_t t = 0; t < basis[i].size(); ++t) star[i][t] = Rat(basis[i][t]);
      for (std::size_t j = 0; j < i; ++j) {
        Rat num(0);
        for (std::size_t t = 0; t < basis[i].size(); ++t) num += Rat(basis[i][t]) * star[j][t];
        mu[i][j] = (Bnorm[j] == 0) ? Rat(0) : num / Bnorm[j];
        for (std::size_t t = 0; t < star[i].size(); ++t) star[i][t] -= mu[i][j] * star[j][t];
      }
      Rat nn(0);
      for (const auto& v : star[i]) nn += v * v;
      Bnorm[i] = nn;
    }
  };

  auto size_reduce = [&](std::size_t i, std::size_t j) {
    // Round mu[i][j] to the nearest integer.
    Rat m = mu[i][j];
    Int q;
    Int num = m.get_num(), den = m.get_den();
    Int r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r * 2 > den) q += 1;
    if (q == 0) return;
    for (std::size_t t = 0; t < basis[i].size(); ++t) basis[i][t] -= q * basis[j][t];
    for (std::size_t t = 0; t < k; ++t) transform[i][t] -= q * transform[j][t];
  };

  recompute_gs();
  std::size_t i = 1;
  long steps = 0;
  while (i < k) {
    if (++steps > 200000) fail(errc::entry_size_limit, "LLL step budget exhausted");
    for (std::size_t j = i; j-- > 0;) size_reduce(i, j);
    recompute_gs();
    if (i >= 1 && Bnorm[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * Bnorm[i - 1]) {
      std::swap(basis[i], basis[i - 1]);
      std::swap(transform[i], transform[i - 1]);
      recompute_gs();
      i = (i > 1) ? i - 1 : 1;
    } else {
      ++i;
    }
  }
  (void)dot;
  return transform;
}

} // namespace inoue
