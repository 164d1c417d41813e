#include "inoue/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "inoue/errors.hpp"

namespace inoue {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for a small prime p.

using u64 = std::uint64_t;

struct ModPoly {
  std::vector<u64> c; // low degree first, entries in [0, p)
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

u64 sub_m(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 mul_m(u64 a, u64 b, u64 p) { return (a * b) % p; } // p < 2^31, no overflow

u64 pow_m(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mul_m(r, a, p);
    a = mul_m(a, a, p);
    e >>= 1u;
  }
  return r;
}

u64 inv_m(u64 a, u64 p) { return pow_m(a % p, p - 2, p); }

ModPoly mp_from_int(const IntPoly& f, u64 p) {
  ModPoly r;
  r.c.resize(f.coeffs().size());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    Int m = f.coeffs()[i] % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    r.c[i] = m.get_ui();
  }
  r.normalize();
  return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.is_zero() || b.is_zero()) return {};
  ModPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
  }
  r.normalize();
  return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = sub_m(r.c[i], b.c[i], p);
  r.normalize();
  return r;
}

void mp_divrem(const ModPoly& num, const ModPoly& den, u64 p, ModPoly& q, ModPoly& r) {
  r = num;
  q = {};
  if (den.is_zero()) fail(errc::invalid_input, "mod-p division by zero");
  int dq = num.degree() - den.degree();
  if (dq < 0) return;
  q.c.assign(static_cast<std::size_t>(dq) + 1, 0);
  u64 inv_lc = inv_m(den.c.back(), p);
  for (int k = dq; k >= 0; --k) {
    std::size_t head = static_cast<std::size_t>(k + den.degree());
    if (head >= r.c.size() || r.c[head] == 0) continue;
    u64 f = mul_m(r.c[head], inv_lc, p);
    q.c[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= den.degree(); ++i) {
      std::size_t idx = static_cast<std::size_t>(k + i);
      r.c[idx] = sub_m(r.c[idx], mul_m(f, den.c[static_cast<std::size_t>(i)], p), p);
    }
  }
  q.normalize();
  r.normalize();
}

ModPoly mp_rem(const ModPoly& num, const ModPoly& den, u64 p) {
  ModPoly q, r;
  mp_divrem(num, den, p, q, r);
  return r;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.is_zero()) {
    ModPoly r = mp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.c.back() != 1) {
    u64 s = inv_m(a.c.back(), p);
    for (auto& v : a.c) v = mul_m(v, s, p);
  }
  return a;
}

ModPoly mp_derivative(const ModPoly& a, u64 p) {
  ModPoly r;
  if (a.degree() <= 0) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = (a.c[i] * (i % p)) % p;
  r.normalize();
  return r;
}

ModPoly mp_powmod_x(u64 e, const ModPoly& f, u64 p) {
  // x^e mod f
  ModPoly base{{0, 1}};
  ModPoly r{{1}};
  while (e) {
    if (e & 1u) r = mp_rem(mp_mul(r, base, p), f, p);
    base = mp_rem(mp_mul(base, base, p), f, p);
    e >>= 1u;
  }
  return r;
}

// Berlekamp factorization of a monic squarefree f over F_p.
std::vector<ModPoly> berlekamp(const ModPoly& f, u64 p) {
  int n = f.degree();
  if (n <= 1) return {f};

  // Rows of Q are the coefficient vectors of x^(ip) mod f.
  std::vector<std::vector<u64>> Q(static_cast<std::size_t>(n), std::vector<u64>(static_cast<std::size_t>(n), 0));
  ModPoly xp = mp_powmod_x(p, f, p);
  ModPoly cur{{1}};
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.c.size(); ++j) Q[static_cast<std::size_t>(i)][j] = cur.c[j];
    if (i + 1 < n) cur = mp_rem(mp_mul(cur, xp, p), f, p);
  }
  // Left nullspace of (Q - I): solve (Q - I)^T v = 0 by elimination.
  std::vector<std::vector<u64>> A(static_cast<std::size_t>(n), std::vector<u64>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      u64 v = Q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (i == j) v = sub_m(v, 1, p);
      A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  std::vector<int> pivot_of_col(static_cast<std::size_t>(n), -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (A[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(A[static_cast<std::size_t>(piv)], A[static_cast<std::size_t>(rank)]);
    u64 inv = inv_m(A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
    for (int j = 0; j < n; ++j)
      A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
          mul_m(A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)], inv, p);
    for (int i = 0; i < n; ++i) {
      if (i == rank) continue;
      u64 fct = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (!fct) continue;
      for (int j = 0; j < n; ++j)
        A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sub_m(
            A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
            mul_m(fct, A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)], p), p);
    }
    pivot_of_col[static_cast<std::size_t>(col)] = rank;
    ++rank;
  }
  std::vector<ModPoly> basis;
  for (int col = 0; col < n; ++col) {
    if (pivot_of_col[static_cast<std::size_t>(col)] >= 0) continue;
    ModPoly v;
    v.c.assign(static_cast<std::size_t>(n), 0);
    v.c[static_cast<std::size_t>(col)] = 1;
    for (int c2 = 0; c2 < n; ++c2) {
      int pr = pivot_of_col[static_cast<std::size_t>(c2)];
      if (pr >= 0)
        v.c[static_cast<std::size_t>(c2)] =
            sub_m(0, A[static_cast<std::size_t>(pr)][static_cast<std::size_t>(col)], p);
    }
    v.normalize();
    basis.push_back(std::move(v));
  }
  // The nullity of Q - I equals the number of irreducible factors; gcd
  // splits against v - s for all s in F_p fully separate them.
  std::size_t r = basis.size();
  std::vector<ModPoly> factors{f};
  for (const auto& v : basis) {
    if (factors.size() >= r) break;
    std::vector<ModPoly> next;
    for (auto& g : factors) {
      if (g.degree() <= 1) { next.push_back(std::move(g)); continue; }
      ModPoly rest = std::move(g);
      for (u64 s = 0; s < p && rest.degree() > 1; ++s) {
        ModPoly shifted = v;
        if (shifted.c.empty()) shifted.c.push_back(0);
        shifted.c[0] = sub_m(shifted.c[0], s, p);
        shifted.normalize();
        ModPoly h = mp_gcd(rest, shifted, p);
        if (h.degree() > 0 && h.degree() < rest.degree()) {
          next.push_back(h);
          ModPoly q, rr;
          mp_divrem(rest, h, p, q, rr);
          rest = std::move(q);
        }
      }
      if (rest.degree() > 0) next.push_back(std::move(rest));
    }
    factors = std::move(next);
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Arithmetic mod p^k over Z, symmetric representatives for the final lift.

Int mod_sym(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (r * 2 > m) r -= m;
  return r;
}

IntPoly poly_mod(const IntPoly& a, const Int& m) {
  std::vector<Int> c(a.coeffs());
  for (auto& v : c) {
    v %= m;
    if (v < 0) v += m;
  }
  return IntPoly(std::move(c));
}

IntPoly poly_mod_sym(const IntPoly& a, const Int& m) {
  std::vector<Int> c(a.coeffs());
  for (auto& v : c) v = mod_sym(v, m);
  return IntPoly(std::move(c));
}

// Division by a monic divisor with coefficients reduced mod m.
void poly_divrem_monic_mod(const IntPoly& num, const IntPoly& den, const Int& m, IntPoly& q, IntPoly& r) {
  std::vector<Int> rem = num.coeffs();
  int dq = num.degree() - den.degree();
  std::vector<Int> quo(dq >= 0 ? static_cast<std::size_t>(dq) + 1 : 0, Int(0));
  for (int k = dq; k >= 0; --k) {
    std::size_t head = static_cast<std::size_t>(k + den.degree());
    if (head >= rem.size()) continue;
    Int f = rem[head] % m;
    if (f < 0) f += m;
    if (f == 0) { rem[head] = 0; continue; }
    quo[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= den.degree(); ++i) {
      std::size_t idx = static_cast<std::size_t>(k + i);
      rem[idx] = (rem[idx] - f * den.coeff(i)) % m;
      if (rem[idx] < 0) rem[idx] += m;
    }
  }
  q = IntPoly(std::move(quo));
  r = IntPoly(std::move(rem));
}

IntPoly poly_mul_mod(const IntPoly& a, const IntPoly& b, const Int& m) { return poly_mod(a * b, m); }

ModPoly mp_from_poly(const IntPoly& f, u64 p) { return mp_from_int(f, p); }

IntPoly mp_to_int(const ModPoly& f) {
  std::vector<Int> c(f.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i) c[i] = Int(static_cast<unsigned long>(f.c[i]));
  return IntPoly(std::move(c));
}

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
// to the same data mod m^2. All inputs monic in g, h; deg s < deg h,
// deg t < deg g.
void hensel_step(const IntPoly& f, const Int& m, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t) {
  Int m2 = m * m;
  IntPoly e = poly_mod(f - g * h, m2);
  IntPoly q, r;
  poly_divrem_monic_mod(poly_mul_mod(s, e, m2), h, m2, q, r);
  IntPoly g1 = poly_mod(g + t * e + q * g, m2);
  IntPoly h1 = poly_mod(h + r, m2);
  IntPoly e2 = poly_mod(s * g1 + t * h1 - IntPoly::constant(1), m2);
  IntPoly c, d;
  poly_divrem_monic_mod(poly_mul_mod(s, e2, m2), h1, m2, c, d);
  IntPoly s1 = poly_mod(s - d, m2);
  IntPoly t1 = poly_mod(t - t * e2 - c * g1, m2);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
  guard_bits(m2);
}

// Lift the pair factorization f = G H from mod p to mod target (a power of p).
void hensel_lift_pair(const IntPoly& f, u64 p, const Int& target, IntPoly& G, IntPoly& H) {
  // Bezout cofactors mod p via the extended Euclid in F_p[x].
  ModPoly a = mp_from_poly(G, p), b = mp_from_poly(H, p);
  ModPoly r0 = a, r1 = b;
  ModPoly s0{{1}}, s1{}, t0{}, t1{{1}};
  while (!r1.is_zero()) {
    ModPoly q, r;
    mp_divrem(r0, r1, p, q, r);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.degree() != 0) fail(errc::internal_inconsistency, "hensel: factors not coprime mod p");
  u64 inv = inv_m(r0.c[0], p);
  for (auto& v : s0.c) v = mul_m(v, inv, p);
  // Renormalize so that deg s < deg H and deg t < deg G, as the lifting
  // step requires: s := s mod H, t := (1 - s G)/H.
  s0 = mp_rem(s0, b, p);
  ModPoly one{{1}};
  ModPoly tq, tr;
  mp_divrem(mp_sub(one, mp_mul(s0, a, p), p), b, p, tq, tr);
  if (!tr.is_zero()) fail(errc::internal_inconsistency, "hensel: Bezout renormalization failed");
  t0 = std::move(tq);

  IntPoly s = mp_to_int(s0), t = mp_to_int(t0);
  Int m(static_cast<unsigned long>(p));
  while (m < target) {
    hensel_step(f, m, G, H, s, t);
    m = m * m;
  }
}

// Lift all modular factors of monic f to factors mod target (>= p^1).
std::vector<IntPoly> hensel_lift_all(const IntPoly& f, u64 p, const Int& target,
                                     const std::vector<ModPoly>& mod_factors) {
  if (mod_factors.size() == 1) return {poly_mod(f, target)};
  std::vector<IntPoly> out;
  IntPoly rest = f;
  std::vector<ModPoly> remaining = mod_factors;
  while (remaining.size() > 1) {
    IntPoly G = mp_to_int(remaining.front());
    ModPoly hprod{{1}};
    for (std::size_t i = 1; i < remaining.size(); ++i) hprod = mp_mul(hprod, remaining[i], p);
    IntPoly H = mp_to_int(hprod);
    hensel_lift_pair(rest, p, target, G, H);
    out.push_back(std::move(G));
    rest = std::move(H);
    remaining.erase(remaining.begin());
  }
  out.push_back(std::move(rest));
  return out;
}

// ---------------------------------------------------------------------------

struct ModularView {
  u64 prime = 0;
  std::vector<ModPoly> factors;
};

bool squarefree_mod(const IntPoly& f, u64 p) {
  ModPoly fm = mp_from_int(f, p);
  if (fm.degree() != f.degree()) return false; // leading coefficient vanished
  ModPoly g = mp_gcd(fm, mp_derivative(fm, p), p);
  return g.degree() == 0;
}

constexpr u64 k_primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};

// Possible degrees of true factors given one modular factorization.
std::vector<char> degree_pattern(const ModularView& mv, int d) {
  std::vector<char> reach(static_cast<std::size_t>(d) + 1, 0);
  reach[0] = 1;
  for (const auto& g : mv.factors) {
    int dg = g.degree();
    for (int i = d; i >= dg; --i)
      if (reach[static_cast<std::size_t>(i - dg)]) reach[static_cast<std::size_t>(i)] = 1;
  }
  return reach;
}

// Mignotte-style bound on coefficients of monic factors of monic f.
Int factor_coeff_bound(const IntPoly& f) {
  Int sum_sq = 0;
  for (const auto& c : f.coeffs()) sum_sq += c * c;
  Int norm = sqrt(sum_sq) + 1;
  return (norm + abs(f.leading())) * pow2(static_cast<unsigned long>(f.degree() + 1));
}

// Factor a squarefree primitive monic polynomial.
std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f) {
  int d = f.degree();
  if (d <= 1) return {f};

  std::vector<ModularView> views;
  for (u64 p : k_primes) {
    if (!squarefree_mod(f, p)) continue;
    ModularView mv;
    mv.prime = p;
    ModPoly fm = mp_from_int(f, p);
    mv.factors = berlekamp(fm, p);
    if (mv.factors.size() == 1) return {f}; // irreducible mod p
    views.push_back(std::move(mv));
    if (views.size() >= 4) break;
  }
  if (views.empty())
    fail(errc::internal_inconsistency, "no usable prime for a squarefree polynomial");

  // Degree-pattern screen across the collected primes.
  std::vector<char> pattern = degree_pattern(views.front(), d);
  for (std::size_t i = 1; i < views.size(); ++i) {
    auto other = degree_pattern(views[i], d);
    for (int j = 0; j <= d; ++j)
      pattern[static_cast<std::size_t>(j)] =
          pattern[static_cast<std::size_t>(j)] && other[static_cast<std::size_t>(j)];
  }
  bool maybe_reducible = false;
  for (int j = 1; j < d; ++j)
    if (pattern[static_cast<std::size_t>(j)]) { maybe_reducible = true; break; }
  if (!maybe_reducible) return {f};

  const ModularView* best = &views.front();
  for (const auto& mv : views)
    if (mv.factors.size() < best->factors.size()) best = &mv;

  Int bound = factor_coeff_bound(f) * 2 + 1;
  Int target(static_cast<unsigned long>(best->prime));
  while (target < bound) target *= target;
  std::vector<IntPoly> lifted = hensel_lift_all(f, best->prime, target, best->factors);

  // Subset recombination by increasing cardinality; the first product whose
  // symmetric lift divides over Z is an irreducible true factor.
  std::vector<IntPoly> result;
  IntPoly rem_poly = f;
  std::vector<IntPoly> pool = lifted;
  std::size_t card = 1;
  while (!pool.empty() && rem_poly.degree() > 0) {
    if (2 * card > pool.size()) {
      result.push_back(rem_poly); // what remains is irreducible
      pool.clear();
      break;
    }
    bool found = false;
    std::vector<std::size_t> idx(card);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      IntPoly cand = IntPoly::constant(1);
      for (std::size_t i : idx) cand = poly_mod(cand * pool[i], target);
      cand = poly_mod_sym(cand, target);
      // Constant-term screen before the full division.
      if (mpz_divisible_p(rem_poly.coeff(0).get_mpz_t(), cand.coeff(0).get_mpz_t())) {
        IntPoly q, r;
        divrem_monic(rem_poly, cand, q, r);
        if (r.is_zero()) {
          result.push_back(cand);
          rem_poly = std::move(q);
          std::vector<IntPoly> next_pool;
          for (std::size_t i = 0, at = 0; i < pool.size(); ++i) {
            if (at < idx.size() && idx[at] == i) { ++at; continue; }
            next_pool.push_back(pool[i]);
          }
          pool = std::move(next_pool);
          found = true;
          break;
        }
      }
      // next subset in lexicographic order
      int pos = static_cast<int>(card) - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == pool.size() - card + static_cast<std::size_t>(pos))
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++card;
  }
  return result;
}

// Factor a squarefree primitive polynomial, not necessarily monic, via the
// standard monicizing substitution F(x) = lc^(d-1) f(x/lc).
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f) {
  if (f.degree() <= 1) return {f};
  if (f.is_monic()) return factor_monic_squarefree(f);
  const Int lc = f.leading();
  int d = f.degree();
  std::vector<Int> c(static_cast<std::size_t>(d) + 1);
  Int scale = 1;
  for (int i = d; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = f.coeff(i) * scale;
    if (i > 0) scale *= lc;
  }
  IntPoly monic(std::move(c));
  std::vector<IntPoly> parts = factor_monic_squarefree(monic);
  std::vector<IntPoly> out;
  for (const auto& h : parts) {
    std::vector<Int> hc(h.coeffs());
    Int s = 1;
    for (std::size_t i = 0; i < hc.size(); ++i) {
      hc[i] *= s;
      s *= lc;
    }
    out.push_back(IntPoly(std::move(hc)).primitive_part());
  }
  return out;
}

} // namespace

std::vector<std::pair<IntPoly, int>> factorize(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_input, "factorize of the zero polynomial");
  std::vector<std::pair<IntPoly, int>> out;
  for (const auto& [g, mult] : squarefree_decomposition(p)) {
    for (const auto& q : factor_squarefree_primitive(g)) out.emplace_back(q, mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  IntPoly w = p.primitive_part();
  if (w.degree() == 1) return true;
  IntPoly g = poly_gcd(w, w.derivative());
  if (g.degree() > 0) return false;
  return factor_squarefree_primitive(w).size() == 1;
}

} // namespace inoue
