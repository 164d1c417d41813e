#include "inoue/qpoly.hpp"

namespace inoue {

namespace {
const Rat kq_zero{0};
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::from_int(const IntPoly& p) {
  std::vector<Rat> v;
  v.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) v.emplace_back(x);
  return QPoly(std::move(v));
}

const Rat& QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kq_zero;
  return c_[static_cast<std::size_t>(i)];
}

const Rat& QPoly::leading() const {
  if (c_.empty()) return kq_zero;
  return c_.back();
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& k) const {
  if (k == 0) return QPoly();
  QPoly r(*this);
  for (auto& v : r.c_) v *= k;
  return r;
}

QPoly QPoly::derivative() const {
  if (degree() <= 0) return QPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(v));
}

void QPoly::make_monic() {
  if (is_zero()) return;
  Rat lc = c_.back();
  for (auto& v : c_) v /= lc;
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly QPoly::to_primitive_int() const {
  if (is_zero()) return IntPoly();
  Int den = 1;
  for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Int> w(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rat scaled = c_[i] * Rat(den);
    w[i] = scaled.get_num(); // den is 1 after scaling
  }
  return IntPoly(std::move(w)).primitive_part();
}

void qpoly_divrem(const QPoly& num, const QPoly& den, QPoly& q, QPoly& r) {
  if (den.is_zero()) fail(errc::invalid_input, "qpoly division by zero");
  std::vector<Rat> rem = num.coeffs().empty() ? std::vector<Rat>{} : num.coeffs();
  int dq = num.degree() - den.degree();
  std::vector<Rat> quo(dq >= 0 ? static_cast<std::size_t>(dq) + 1 : 0, Rat(0));
  const Rat& lc = den.leading();
  for (int k = dq; k >= 0; --k) {
    Rat head = (static_cast<std::size_t>(k + den.degree()) < rem.size())
                   ? rem[static_cast<std::size_t>(k + den.degree())]
                   : Rat(0);
    if (head == 0) continue;
    Rat f = head / lc;
    quo[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= den.degree(); ++i)
      rem[static_cast<std::size_t>(k + i)] -= f * den.coeff(i);
  }
  q = QPoly(std::move(quo));
  r = QPoly(std::move(rem));
}

QPoly qpoly_exact_div(const QPoly& num, const QPoly& den) {
  QPoly q, r;
  qpoly_divrem(num, den, q, r);
  if (!r.is_zero()) fail(errc::internal_inconsistency, "qpoly_exact_div: nonzero remainder");
  return q;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    qpoly_divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  a.make_monic();
  return a;
}

QPoly qpoly_ext_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(Rat(1)), s1;
  QPoly t0, t1 = QPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    QPoly q, r;
    qpoly_divrem(r0, r1, q, r);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (!r0.is_zero()) {
    Rat lc = r0.leading();
    r0.make_monic();
    s = s0 * Rat(1 / lc);
    t = t0 * Rat(1 / lc);
  } else {
    s = s0;
    t = t0;
  }
  return r0;
}

} // namespace inoue
