#include "inoue/dyadic.hpp"

#include <cmath>
#include <sstream>

namespace inoue {

namespace {
constexpr long k_radius_bits = 32;
}

Dyadic::Dyadic(Int mant, long exp) : m(std::move(mant)), e(exp) {
  if (m == 0) {
    e = 0;
    return;
  }
  // Strip trailing zero bits to keep mantissas canonical.
  unsigned long tz = mpz_scan1(m.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), tz);
    e += static_cast<long>(tz);
  }
}

Rat Dyadic::to_rat() const {
  Rat r(m);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

double Dyadic::to_double() const {
  signed long ex;
  double d = mpz_get_d_2exp(&ex, m.get_mpz_t());
  return std::ldexp(d, static_cast<int>(ex + e));
}

std::string Dyadic::to_string() const {
  std::ostringstream os;
  os << m.get_str() << "*2^" << e;
  return os.str();
}

namespace {

// Align two dyadics on a common exponent.
void align(const Dyadic& a, const Dyadic& b, Int& ma, Int& mb, long& e) {
  if (a.is_zero()) { ma = 0; mb = b.m; e = b.e; return; }
  if (b.is_zero()) { ma = a.m; mb = 0; e = a.e; return; }
  e = std::min(a.e, b.e);
  ma = a.m;
  mb = b.m;
  if (a.e > e) mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), static_cast<unsigned long>(a.e - e));
  if (b.e > e) mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), static_cast<unsigned long>(b.e - e));
}

} // namespace

Dyadic Dyadic::operator+(const Dyadic& o) const {
  Int ma, mb;
  long e2;
  align(*this, o, ma, mb, e2);
  return Dyadic(ma + mb, e2);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
  Int ma, mb;
  long e2;
  align(*this, o, ma, mb, e2);
  return Dyadic(ma - mb, e2);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
  if (is_zero() || o.is_zero()) return Dyadic();
  return Dyadic(m * o.m, e + o.e);
}

Dyadic Dyadic::round_down(long max_bits) const {
  if (is_zero()) return *this;
  long bits = static_cast<long>(bit_size(m));
  if (bits <= max_bits) return *this;
  long k = bits - max_bits;
  Int q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
  return Dyadic(std::move(q), e + k);
}

Dyadic Dyadic::round_up(long max_bits) const {
  if (is_zero()) return *this;
  long bits = static_cast<long>(bit_size(m));
  if (bits <= max_bits) return *this;
  long k = bits - max_bits;
  Int q;
  mpz_cdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
  return Dyadic(std::move(q), e + k);
}

int cmp(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() && b.is_zero()) return 0;
  int sa = a.sgn(), sb = b.sgn();
  if (sa != sb) return sa < sb ? -1 : 1;
  Int ma, mb;
  long e;
  align(a, b, ma, mb, e);
  return cmp(ma, mb) < 0 ? -1 : (ma == mb ? 0 : 1);
}

Dyadic dyadic_from_rat(const Rat& v, long prec, bool round_up) {
  if (v == 0) return Dyadic();
  const Int& num = v.get_num();
  const Int& den = v.get_den();
  if (den == 1) return Dyadic(num, 0);
  long shift = prec + static_cast<long>(bit_size(den));
  Int scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
  Int q;
  if (round_up)
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  else
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  return Dyadic(std::move(q), -shift);
}

DyadicInterval::DyadicInterval(Dyadic center, Dyadic radius) : c(std::move(center)), r(std::move(radius)) {
  if (r.sgn() < 0) fail(errc::internal_inconsistency, "negative interval radius");
}

DyadicInterval DyadicInterval::from_endpoints(const Dyadic& lo, const Dyadic& hi) {
  if (cmp(hi, lo) < 0) fail(errc::internal_inconsistency, "interval endpoints out of order");
  return DyadicInterval((lo + hi).half(), (hi - lo).half());
}

DyadicInterval DyadicInterval::from_rat(const Rat& v, long prec) {
  Dyadic lo = dyadic_from_rat(v, prec, false);
  Dyadic hi = dyadic_from_rat(v, prec, true);
  return from_endpoints(lo, hi);
}

DyadicInterval DyadicInterval::from_rat_endpoints(const Rat& lo, const Rat& hi, long prec) {
  Dyadic l = dyadic_from_rat(lo, prec, false);
  Dyadic h = dyadic_from_rat(hi, prec, true);
  return from_endpoints(l, h);
}

bool DyadicInterval::contains_zero() const { return cmp(c.abs_value(), r) <= 0; }
bool DyadicInterval::excludes_zero() const { return cmp(c.abs_value(), r) > 0; }

int DyadicInterval::sign() const {
  if (excludes_zero()) return c.sgn();
  if (c.is_zero() && r.is_zero()) return 0;
  fail(errc::precision_exhausted, "interval sign query on an interval containing zero");
}

bool DyadicInterval::contains(const Dyadic& v) const {
  return cmp(lo(), v) <= 0 && cmp(v, hi()) <= 0;
}

bool DyadicInterval::contains(const Rat& v) const {
  return lo().to_rat() <= v && v <= hi().to_rat();
}

bool DyadicInterval::contains_interval(const DyadicInterval& o) const {
  return cmp(lo(), o.lo()) <= 0 && cmp(o.hi(), hi()) <= 0;
}

bool DyadicInterval::strictly_inside(const DyadicInterval& outer) const {
  return cmp(outer.lo(), lo()) < 0 && cmp(hi(), outer.hi()) < 0;
}

bool DyadicInterval::intersects(const DyadicInterval& o) const {
  return cmp(lo(), o.hi()) <= 0 && cmp(o.lo(), hi()) <= 0;
}

Dyadic DyadicInterval::mig_lower() const {
  Dyadic d = c.abs_value() - r;
  if (d.sgn() < 0) return Dyadic();
  return d;
}

DyadicInterval DyadicInterval::rounded(long prec) const {
  Dyadic nc = c;
  Dyadic nr = r;
  long cbits = static_cast<long>(bit_size(nc.m));
  if (cbits > prec) {
    Dyadic down = nc.round_down(prec);
    nr = nr + (nc - down); // exact nonnegative slack
    nc = down;
  }
  if (static_cast<long>(bit_size(nr.m)) > k_radius_bits) nr = nr.round_up(k_radius_bits);
  guard_bits(nc.m);
  return DyadicInterval(std::move(nc), std::move(nr));
}

DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, long prec) {
  return DyadicInterval(a.c + b.c, a.r + b.r).rounded(prec);
}

DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, long prec) {
  return DyadicInterval(a.c - b.c, a.r + b.r).rounded(prec);
}

DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, long prec) {
  Dyadic c = a.c * b.c;
  Dyadic r = a.c.abs_value() * b.r + b.c.abs_value() * a.r + a.r * b.r;
  return DyadicInterval(std::move(c), std::move(r)).rounded(prec);
}

DyadicInterval mul_exact_scalar(const DyadicInterval& a, const Dyadic& s) {
  return DyadicInterval(a.c * s, a.r * s.abs_value());
}

namespace {

// Directed reciprocal of a nonzero dyadic.
Dyadic dyadic_recip(const Dyadic& v, long prec, bool round_up) {
  Int num = 1;
  long shift = prec + static_cast<long>(bit_size(v.m));
  Int scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
  Int q;
  if (round_up)
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.m.get_mpz_t());
  else
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.m.get_mpz_t());
  return Dyadic(std::move(q), -shift - v.e);
}

} // namespace

DyadicInterval recip(const DyadicInterval& a, long prec) {
  if (!a.excludes_zero())
    fail(errc::precision_exhausted, "interval reciprocal of an interval containing zero");
  Dyadic lo = a.lo(), hi = a.hi();
  Dyadic inv_lo = dyadic_recip(hi, prec + 4, false);
  Dyadic inv_hi = dyadic_recip(lo, prec + 4, true);
  return DyadicInterval::from_endpoints(inv_lo, inv_hi).rounded(prec);
}

DyadicInterval div(const DyadicInterval& a, const DyadicInterval& b, long prec) {
  return mul(a, recip(b, prec + 8), prec);
}

std::optional<DyadicInterval> intersect(const DyadicInterval& a, const DyadicInterval& b) {
  Dyadic lo = cmp(a.lo(), b.lo()) >= 0 ? a.lo() : b.lo();
  Dyadic hi = cmp(a.hi(), b.hi()) <= 0 ? a.hi() : b.hi();
  if (cmp(hi, lo) < 0) return std::nullopt;
  return DyadicInterval::from_endpoints(lo, hi);
}

DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b) {
  Dyadic lo = cmp(a.lo(), b.lo()) <= 0 ? a.lo() : b.lo();
  Dyadic hi = cmp(a.hi(), b.hi()) >= 0 ? a.hi() : b.hi();
  return DyadicInterval::from_endpoints(lo, hi);
}

Dyadic DyadicComplexInterval::width_max() const {
  Dyadic wr = re.width(), wi = im.width();
  return cmp(wr, wi) >= 0 ? wr : wi;
}

DyadicComplexInterval add(const DyadicComplexInterval& a, const DyadicComplexInterval& b, long prec) {
  return DyadicComplexInterval(add(a.re, b.re, prec), add(a.im, b.im, prec));
}

DyadicComplexInterval sub(const DyadicComplexInterval& a, const DyadicComplexInterval& b, long prec) {
  return DyadicComplexInterval(sub(a.re, b.re, prec), sub(a.im, b.im, prec));
}

DyadicComplexInterval mul(const DyadicComplexInterval& a, const DyadicComplexInterval& b, long prec) {
  DyadicInterval re = sub(mul(a.re, b.re, prec), mul(a.im, b.im, prec), prec);
  DyadicInterval im = add(mul(a.re, b.im, prec), mul(a.im, b.re, prec), prec);
  return DyadicComplexInterval(std::move(re), std::move(im));
}

DyadicInterval norm_sq(const DyadicComplexInterval& a, long prec) {
  return add(mul(a.re, a.re, prec), mul(a.im, a.im, prec), prec);
}

DyadicComplexInterval recip(const DyadicComplexInterval& a, long prec) {
  DyadicInterval den = norm_sq(a, prec + 8);
  DyadicInterval inv_den = recip(den, prec + 8);
  return DyadicComplexInterval(mul(a.re, inv_den, prec), mul(-a.im, inv_den, prec));
}

DyadicComplexInterval div(const DyadicComplexInterval& a, const DyadicComplexInterval& b, long prec) {
  return mul(a, recip(b, prec + 8), prec);
}

std::optional<DyadicComplexInterval> intersect(const DyadicComplexInterval& a,
                                               const DyadicComplexInterval& b) {
  auto re = intersect(a.re, b.re);
  auto im = intersect(a.im, b.im);
  if (!re || !im) return std::nullopt;
  return DyadicComplexInterval(std::move(*re), std::move(*im));
}

} // namespace inoue
