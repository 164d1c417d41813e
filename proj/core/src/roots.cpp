#include "inoue/roots.hpp"

#include <algorithm>
#include <complex>

namespace inoue {

DyadicComplexInterval ComplexBox::to_ball(long prec) const {
  return DyadicComplexInterval(DyadicInterval::from_rat_endpoints(re_lo, re_hi, prec),
                               DyadicInterval::from_rat_endpoints(im_lo, im_hi, prec));
}

// ---------------------------------------------------------------------------
// Sturm machinery

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_input, "Sturm chain of the zero polynomial");
  // Content is stripped with the sign preserved: the variation property
  // only allows scaling by positive constants.
  auto strip_content = [](const IntPoly& q) {
    if (q.is_zero()) return q;
    Int g = q.content();
    std::vector<Int> c(q.coeffs());
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
  };
  IntPoly f = strip_content(p);
  chain_.push_back(f);
  if (f.degree() >= 1) {
    chain_.push_back(strip_content(f.derivative()));
    while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
      const IntPoly& a = chain_[chain_.size() - 2];
      const IntPoly& b = chain_.back();
      // prem multiplies by lc(b)^(delta+1); when that factor is negative the
      // pseudo-remainder already carries the wanted minus sign.
      int delta = a.degree() - b.degree();
      bool multiplier_negative = (sign_of(b.leading()) < 0) && (delta % 2 == 0);
      IntPoly r = pseudo_rem(a, b);
      if (r.is_zero()) break;
      r = multiplier_negative ? strip_content(r) : strip_content(-r);
      chain_.push_back(std::move(r));
    }
    if (chain_.back().is_zero()) chain_.pop_back();
  }
  // Cauchy bound, padded to the next power of two.
  Rat maxratio(1);
  for (int i = 0; i < f.degree(); ++i) {
    Rat c(abs(f.coeff(i)), abs(f.leading()));
    c.canonicalize();
    if (c > maxratio) maxratio = c;
  }
  Rat b = maxratio + 1;
  Rat bound(2);
  while (bound <= b) bound *= 2;
  bound_ = bound;
}

int SturmChain::variations_at(const Rat& x) const {
  int var = 0, last = 0;
  for (const auto& q : chain_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

int SturmChain::count(const Rat& lo, const Rat& hi) const {
  if (!(lo < hi)) fail(errc::invalid_input, "sturm count needs lo < hi");
  // Endpoint roots break the half-open counting convention; the caller must
  // perturb.
  if (chain_.front().sign_at(lo) == 0 || chain_.front().sign_at(hi) == 0)
    fail(errc::endpoint_is_root, "interval endpoint is a root; perturb the endpoint");
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const { return count(-bound_, bound_); }

int sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi) {
  return SturmChain(p).count(lo, hi);
}

// ---------------------------------------------------------------------------
// Real root isolation

namespace {

// Multiplicity of the single root inside iso, from the Yun split of p.
int lookup_multiplicity(const std::vector<std::pair<IntPoly, int>>& yun, const Rat& lo, const Rat& hi) {
  for (const auto& [fac, mult] : yun) {
    if (fac.degree() < 1) continue;
    if (SturmChain(fac).count(lo, hi) == 1) return mult;
  }
  fail(errc::internal_inconsistency, "isolated root matches no squarefree factor");
}

} // namespace

std::vector<RealIsolatingInterval> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_input, "root isolation of the zero polynomial");
  std::vector<RealIsolatingInterval> out;
  if (p.degree() < 1) return out;
  IntPoly g = squarefree_part(p);
  if (g.degree() < 1) return out;
  SturmChain chain(g);
  auto yun = squarefree_decomposition(p);

  struct Seg {
    Rat lo, hi;
    int n;
  };
  std::vector<Seg> stack;
  {
    Rat b = chain.root_bound();
    int n = chain.count(-b, b);
    if (n > 0) stack.push_back({-b, b, n});
  }
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.n == 1 && s.hi - s.lo <= 1) {
      out.push_back({s.lo, s.hi, lookup_multiplicity(yun, s.lo, s.hi)});
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    if (g.sign_at(mid) == 0) {
      // Root exactly at the midpoint: carve out a tiny interval around it
      // whose endpoints are not roots.
      Rat eps = (s.hi - s.lo) / 4;
      if (eps > Rat(1, 4)) eps = Rat(1, 4);
      for (;;) {
        Rat a = mid - eps, b = mid + eps;
        if (g.sign_at(a) != 0 && g.sign_at(b) != 0 && chain.count(a, b) == 1) {
          out.push_back({a, b, lookup_multiplicity(yun, a, b)});
          int left = (a > s.lo) ? chain.count(s.lo, a) : 0;
          int right = (b < s.hi) ? chain.count(b, s.hi) : 0;
          if (left > 0) stack.push_back({s.lo, a, left});
          if (right > 0) stack.push_back({b, s.hi, right});
          break;
        }
        eps /= 2;
      }
      continue;
    }
    int left = chain.count(s.lo, mid);
    int right = s.n - left;
    if (left > 0) stack.push_back({s.lo, mid, left});
    if (right > 0) stack.push_back({mid, s.hi, right});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

DyadicInterval refine_real(const IntPoly& p, const RealIsolatingInterval& iso, long bits) {
  IntPoly g = squarefree_part(p);
  Rat lo = iso.lo, hi = iso.hi;
  int slo = g.sign_at(lo);
  int shi = g.sign_at(hi);
  if (slo == 0 || shi == 0)
    fail(errc::endpoint_is_root, "isolating interval endpoint is a root");
  if (slo == shi)
    fail(errc::invalid_input, "interval does not isolate a simple sign change");

  Rat target(Int(1), pow2(static_cast<unsigned long>(bits + 2)));
  target.canonicalize();
  while (hi - lo > target) {
    Rat mid = (lo + hi) / 2;
    int sm = g.sign_at(mid);
    if (sm == 0) {
      // Exact rational root. Dyadic midpoints give an exact point result;
      // other rationals get a minimal outward-rounded interval.
      if (mpz_scan1(mid.get_den().get_mpz_t(), 0) ==
          mpz_sizeinbase(mid.get_den().get_mpz_t(), 2) - 1) {
        return DyadicInterval::exact(dyadic_from_rat(mid, bits, false));
      }
      return DyadicInterval::from_rat(mid, bits + 2);
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return DyadicInterval::from_rat_endpoints(lo, hi, bits + 2);
}

// ---------------------------------------------------------------------------
// Complex enclosures

namespace {

DyadicComplexInterval eval_ball_impl(const IntPoly& p, const DyadicComplexInterval& z, long prec) {
  DyadicComplexInterval acc; // zero
  for (int i = p.degree(); i >= 0; --i) {
    acc = mul(acc, z, prec);
    if (p.coeff(i) != 0)
      acc.re = add(acc.re, DyadicInterval::from_int(p.coeff(i)), prec);
  }
  return acc;
}

// Exact evaluation at a dyadic complex point (coefficients are integers, so
// no rounding happens at all).
DyadicComplexInterval eval_exact_point(const IntPoly& p, const Dyadic& re, const Dyadic& im) {
  Dyadic ar, ai; // accumulator
  for (int i = p.degree(); i >= 0; --i) {
    Dyadic nr = ar * re - ai * im;
    Dyadic ni = ar * im + ai * re;
    ar = std::move(nr);
    ai = std::move(ni);
    if (p.coeff(i) != 0) ar = ar + Dyadic::from_int(p.coeff(i));
  }
  return DyadicComplexInterval::exact_point(ar, ai);
}

struct Candidate {
  Dyadic re, im;
};

Dyadic dyadic_from_double(double v) {
  if (v == 0.0 || !std::isfinite(v)) return Dyadic();
  int ex = 0;
  double m = std::frexp(v, &ex);
  long mant = static_cast<long>(std::ldexp(m, 53));
  return Dyadic(Int(mant), ex - 53);
}

// Floating-point Aberth iteration; purely a warm start.
std::vector<std::complex<double>> aberth(const IntPoly& g, int extra_rounds) {
  int d = g.degree();
  std::vector<double> c(static_cast<std::size_t>(d) + 1);
  long emax = -100000;
  for (int i = 0; i <= d; ++i)
    if (g.coeff(i) != 0) emax = std::max(emax, static_cast<long>(bit_size(g.coeff(i))));
  for (int i = 0; i <= d; ++i) {
    signed long ex;
    double m = mpz_get_d_2exp(&ex, g.coeff(i).get_mpz_t());
    c[static_cast<std::size_t>(i)] = std::ldexp(m, static_cast<int>(ex - emax));
  }
  auto eval = [&](std::complex<double> z, std::complex<double>& deriv) {
    std::complex<double> v = 0, dv = 0;
    for (int i = d; i >= 0; --i) {
      dv = dv * z + v;
      v = v * z + c[static_cast<std::size_t>(i)];
    }
    deriv = dv;
    return v;
  };
  double radius = 1.0;
  for (int i = 0; i < d; ++i)
    radius = std::max(radius, 2.0 * std::pow(std::abs(c[static_cast<std::size_t>(i)] /
                                                      c[static_cast<std::size_t>(d)]),
                                             1.0 / (d - i)));
  std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    double ang = 2.0 * 3.14159265358979323846 * i / d + 0.45;
    z[static_cast<std::size_t>(i)] = std::polar(radius * (0.5 + 0.3 * ((i * 7) % 5) / 5.0), ang);
  }
  int iterations = 60 + 20 * d + extra_rounds;
  for (int it = 0; it < iterations; ++it) {
    double worst = 0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> deriv;
      std::complex<double> v = eval(z[static_cast<std::size_t>(i)], deriv);
      if (std::abs(v) == 0.0) continue;
      std::complex<double> w = v / deriv;
      std::complex<double> s = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) s += 1.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      std::complex<double> step = w / (1.0 - w * s);
      z[static_cast<std::size_t>(i)] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

// A couple of exact Newton steps at a dyadic point to sharpen a warm-start
// approximation beyond double precision.
Candidate polish(const IntPoly& g, const IntPoly& dg, Candidate z, long prec, int steps) {
  for (int s = 0; s < steps; ++s) {
    DyadicComplexInterval val = eval_exact_point(g, z.re, z.im);
    DyadicComplexInterval der = eval_exact_point(dg, z.re, z.im);
    if (der.contains_zero()) break;
    DyadicComplexInterval step = div(val, der, prec + 16);
    Dyadic nre = (DyadicInterval::exact(z.re).c - step.re.c).round_down(prec);
    Dyadic nim = (DyadicInterval::exact(z.im).c - step.im.c).round_down(prec);
    z.re = nre;
    z.im = nim;
  }
  return z;
}

// Krawczyk operator K(X) = c - Y g(c) + (1 - Y g'(X)) (X - c) around the
// center of X. If K(X) lands strictly inside X, then X contains exactly one
// root of g and so does K(X).
bool krawczyk_once(const IntPoly& g, const IntPoly& dg, const DyadicComplexInterval& X, long prec,
                   DyadicComplexInterval& K_out) {
  Dyadic cre = X.re.c, cim = X.im.c;
  DyadicComplexInterval gc = eval_exact_point(g, cre, cim);
  DyadicComplexInterval dgc = eval_exact_point(dg, cre, cim);
  if (dgc.contains_zero()) return false;
  DyadicComplexInterval Y = recip(dgc, prec);
  DyadicComplexInterval dgX = eval_ball_impl(dg, X, prec);
  DyadicComplexInterval one = DyadicComplexInterval::exact_point(Dyadic::from_int(1), Dyadic());
  DyadicComplexInterval contraction = sub(one, mul(Y, dgX, prec), prec);
  DyadicComplexInterval cpt = DyadicComplexInterval::exact_point(cre, cim);
  DyadicComplexInterval diff = sub(X, cpt, prec);
  K_out = add(sub(cpt, mul(Y, gc, prec), prec), mul(contraction, diff, prec), prec);
  return true;
}

// Certify and refine one approximate non-real root. Returns nullopt when
// the contraction cannot be established from this start.
std::optional<DyadicComplexInterval> certify_root(const IntPoly& g, const IntPoly& dg, Candidate z,
                                                  long bits) {
  long prec = bits + 64;
  Rat width_target(Int(1), pow2(static_cast<unsigned long>(bits)));
  width_target.canonicalize();

  for (int attempt = 0; attempt < 8; ++attempt) {
    z = polish(g, dg, z, prec, attempt + 2);
    // Initial box: radius from the last Newton step size estimate.
    DyadicComplexInterval val = eval_exact_point(g, z.re, z.im);
    DyadicComplexInterval der = eval_exact_point(dg, z.re, z.im);
    if (der.contains_zero()) continue;
    DyadicComplexInterval step = div(val, der, prec);
    Dyadic rad = (step.re.mag_upper() + step.im.mag_upper() + Dyadic::one_shifted(-prec / 2)) *
                 Dyadic::from_int(4);
    DyadicComplexInterval X(DyadicInterval(z.re, rad), DyadicInterval(z.im, rad));
    DyadicComplexInterval K;
    if (!krawczyk_once(g, dg, X, prec, K)) continue;
    if (!K.strictly_inside(X)) continue;

    // Certified: exactly one root in X. Contract until the target width.
    auto met = [&](const DyadicComplexInterval& b) {
      return b.width_max().to_rat() <= width_target;
    };
    auto first = intersect(K, X);
    DyadicComplexInterval cur = first ? *first : K;
    for (int it = 0; it < 128 && !met(cur); ++it) {
      DyadicComplexInterval K2;
      if (!krawczyk_once(g, dg, cur, prec, K2)) break;
      auto merged = intersect(K2, cur);
      if (!merged) break;
      cur = *merged;
    }
    if (met(cur)) return cur;
  }
  return std::nullopt;
}

Rat rat_of(const Dyadic& d) { return d.to_rat(); }

} // namespace

DyadicInterval eval_ball(const IntPoly& p, const DyadicInterval& x, long prec) {
  DyadicInterval acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = mul(acc, x, prec);
    if (p.coeff(i) != 0) acc = add(acc, DyadicInterval::from_int(p.coeff(i)), prec);
  }
  return acc;
}

DyadicComplexInterval eval_ball(const IntPoly& p, const DyadicComplexInterval& z, long prec) {
  return eval_ball_impl(p, z, prec);
}

std::vector<ComplexBox> enclose_complex_roots(const IntPoly& p, long bits) {
  if (p.is_zero()) fail(errc::invalid_input, "enclosure of roots of the zero polynomial");
  std::vector<ComplexBox> out;
  if (p.degree() < 1) return out;
  IntPoly g = squarefree_part(p);
  IntPoly dg = g.derivative();
  int d = g.degree();
  long prec = bits + 64;

  // Real roots first: exact Sturm isolation, refined to the target width.
  std::vector<RealIsolatingInterval> reals = isolate_real_roots(p);
  for (const auto& iso : reals) {
    DyadicInterval re = refine_real(p, iso, bits + 1);
    out.push_back(ComplexBox{rat_of(re.lo()), rat_of(re.hi()), Rat(0), Rat(0), iso.multiplicity});
  }
  int n_real = static_cast<int>(reals.size());
  if ((d - n_real) % 2 != 0)
    fail(errc::internal_inconsistency, "real/complex root parity mismatch");
  int n_pairs = (d - n_real) / 2;

  if (n_pairs > 0) {
    auto yun = squarefree_decomposition(p);
    std::vector<DyadicComplexInterval> boxes;
    for (int round = 0; round < 6 && static_cast<int>(boxes.size()) < n_pairs; ++round) {
      boxes.clear();
      std::vector<std::complex<double>> approx = aberth(g, 40 * round);
      // Keep upper-half-plane representatives, best first by |Im|.
      std::sort(approx.begin(), approx.end(),
                [](const auto& a, const auto& b) { return a.imag() > b.imag(); });
      for (const auto& z : approx) {
        if (static_cast<int>(boxes.size()) >= n_pairs) break;
        if (z.imag() <= 0) continue;
        Candidate cand{dyadic_from_double(z.real()), dyadic_from_double(z.imag())};
        auto box = certify_root(g, dg, cand, bits + 1);
        if (!box) continue;
        if (!box->im.excludes_zero() || box->im.sign() < 0) continue;
        bool dup = false;
        for (const auto& other : boxes)
          if (box->intersects(other)) { dup = true; break; }
        if (dup) continue;
        boxes.push_back(*box);
      }
    }
    if (static_cast<int>(boxes.size()) != n_pairs)
      fail(errc::precision_exhausted,
           "failed to certify all complex roots; retry with higher bits");

    // Attach multiplicities via the Yun factors: exactly one factor may
    // vanish on a certified box.
    for (auto& box : boxes) {
      int mult = 0;
      DyadicComplexInterval work = box;
      for (int tries = 0; tries < 8 && mult == 0; ++tries) {
        int candidate = 0, hits = 0;
        for (const auto& [fac, m] : yun) {
          if (eval_ball_impl(fac, work, prec).contains_zero()) {
            candidate = m;
            ++hits;
          }
        }
        if (hits == 1) {
          mult = candidate;
          break;
        }
        DyadicComplexInterval shrunk;
        if (!krawczyk_once(g, dg, work, prec, shrunk)) break;
        auto merged = intersect(shrunk, work);
        if (!merged) break;
        work = *merged;
      }
      if (mult == 0)
        fail(errc::precision_exhausted, "could not attribute a multiplicity; retry with higher bits");
      box = work;
      out.push_back(ComplexBox{rat_of(box.re.lo()), rat_of(box.re.hi()), rat_of(box.im.lo()),
                               rat_of(box.im.hi()), mult});
      out.push_back(out.back().conjugate());
    }
  }

  // Completeness and disjointness of the certificate: one distinct root per
  // box, pairwise disjoint, and the count matches the degree of the
  // squarefree part, so every root is covered.
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& a = out[i];
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      const auto& b = out[j];
      bool sep = a.re_hi < b.re_lo || b.re_hi < a.re_lo || a.im_hi < b.im_lo || b.im_hi < a.im_lo;
      if (!sep) fail(errc::precision_exhausted, "certified boxes overlap; retry with higher bits");
    }
  }
  if (static_cast<int>(out.size()) != n_real + 2 * n_pairs)
    fail(errc::internal_inconsistency, "box census mismatch");

  std::sort(out.begin(), out.end(), [](const ComplexBox& a, const ComplexBox& b) {
    if (a.re_lo != b.re_lo) return a.re_lo < b.re_lo;
    return a.im_lo < b.im_lo;
  });
  return out;
}

} // namespace inoue
