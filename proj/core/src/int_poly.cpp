#include "inoue/int_poly.hpp"

#include <sstream>

#include "inoue/qpoly.hpp"

namespace inoue {

namespace {
const Int k_zero{0};
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Int coeff, int degree) {
  if (coeff == 0 || degree < 0) return IntPoly();
  std::vector<Int> v(static_cast<std::size_t>(degree) + 1, Int(0));
  v.back() = std::move(coeff);
  return IntPoly(std::move(v));
}

const Int& IntPoly::leading() const {
  if (c_.empty()) return k_zero;
  return c_.back();
}

const Int& IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return k_zero;
  return c_[static_cast<std::size_t>(i)];
}

void IntPoly::set_coeff(int i, Int v) {
  if (i < 0) fail(errc::invalid_input, "negative coefficient index");
  if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, Int(0));
  c_[static_cast<std::size_t>(i)] = std::move(v);
  normalize();
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  if (!v.empty()) guard_bits(v.front()), guard_bits(v.back());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& k) const {
  if (k == 0) return IntPoly();
  IntPoly r(*this);
  for (auto& v : r.c_) v *= k;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (degree() <= 0) return IntPoly();
  std::vector<Int> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r = IntPoly::constant(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  // p(a/b) * b^deg stays integral; evaluate that way and divide once.
  if (c_.empty()) return Rat(0);
  const Int& a = x.get_num();
  const Int& b = x.get_den();
  Int acc = 0, bpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * a + *it * bpow;
    if (it + 1 != c_.rend()) bpow *= b;
  }
  Int den;
  mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(degree()));
  Rat r(acc, den);
  r.canonicalize();
  return r;
}

int IntPoly::sign_at(const Rat& x) const {
  if (c_.empty()) return 0;
  const Int& a = x.get_num();
  const Int& b = x.get_den();
  Int acc = 0, bpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * a + *it * bpow;
    if (it + 1 != c_.rend()) bpow *= b;
  }
  return sign_of(acc);
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  if (sign_of(leading()) < 0) g = -g;
  IntPoly r(*this);
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> v(c_.rbegin(), c_.rend());
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& v = coeff(i);
    if (v == 0) continue;
    Int a = abs(v);
    if (first) {
      if (sign_of(v) < 0) os << "-";
      first = false;
    } else {
      os << (sign_of(v) < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) fail(errc::invalid_input, "division by zero polynomial");
  if (num.is_zero()) return IntPoly();
  if (num.degree() < den.degree())
    fail(errc::internal_inconsistency, "exact_div: quotient degree underflow");
  std::vector<Int> r = num.coeffs();
  std::vector<Int> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Int(0));
  const Int& lc = den.leading();
  for (int k = num.degree() - den.degree(); k >= 0; --k) {
    Int& head = r[static_cast<std::size_t>(k + den.degree())];
    if (head == 0) continue;
    if (!mpz_divisible_p(head.get_mpz_t(), lc.get_mpz_t()))
      fail(errc::internal_inconsistency, "exact_div: division is not exact");
    Int f;
    mpz_divexact(f.get_mpz_t(), head.get_mpz_t(), lc.get_mpz_t());
    q[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= den.degree(); ++i)
      r[static_cast<std::size_t>(k + i)] -= f * den.coeff(i);
  }
  for (const auto& v : r)
    if (v != 0) fail(errc::internal_inconsistency, "exact_div: nonzero remainder");
  return IntPoly(std::move(q));
}

void divrem_monic(const IntPoly& num, const IntPoly& den, IntPoly& q, IntPoly& r) {
  if (!den.is_monic()) fail(errc::invalid_input, "divrem_monic needs a monic divisor");
  std::vector<Int> rem = num.coeffs();
  int dq = num.degree() - den.degree();
  std::vector<Int> quo(dq >= 0 ? static_cast<std::size_t>(dq) + 1 : 0, Int(0));
  for (int k = dq; k >= 0; --k) {
    Int head = rem[static_cast<std::size_t>(k + den.degree())];
    if (head == 0) continue;
    quo[static_cast<std::size_t>(k)] = head;
    for (int i = 0; i <= den.degree(); ++i)
      rem[static_cast<std::size_t>(k + i)] -= head * den.coeff(i);
  }
  q = IntPoly(std::move(quo));
  r = IntPoly(std::move(rem));
}

IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) fail(errc::invalid_input, "pseudo_rem by zero");
  if (f.degree() < g.degree()) return f;
  IntPoly r = f;
  const Int& lc = g.leading();
  int steps = f.degree() - g.degree() + 1;
  int done = 0;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    int shift = r.degree() - g.degree();
    Int head = r.leading();
    r = r * lc - IntPoly::monomial(head, shift) * g;
    guard_bits(r.is_zero() ? head : r.leading());
    ++done;
  }
  // Pad to the full multiplier lc^(deg f - deg g + 1).
  for (; done < steps; ++done) r = r * lc;
  return r;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  Int ca = a.content(), cb = b.content();
  Int cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly u = a.primitive_part(), v = b.primitive_part();
  if (u.is_zero()) return v * cg;
  if (v.is_zero()) return u * cg;
  if (u.degree() < v.degree()) std::swap(u, v);
  // Primitive PRS; adequate at the degrees this library handles.
  while (!v.is_zero()) {
    IntPoly r = pseudo_rem(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  return u.primitive_part() * cg;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_input, "squarefree_part of the zero polynomial");
  IntPoly w = p.primitive_part();
  if (w.degree() == 0) return IntPoly::constant(1);
  IntPoly g = poly_gcd(w, w.derivative());
  if (g.degree() == 0) return w;
  return exact_div(w, g).primitive_part();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_input, "squarefree decomposition of the zero polynomial");
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() == 0) return out;

  // Yun's algorithm over Q; each emitted factor is scaled back to a
  // primitive integer polynomial.
  QPoly w = QPoly::from_int(p.primitive_part());
  w.make_monic();
  QPoly a0 = qpoly_gcd(w, w.derivative());
  QPoly b = qpoly_exact_div(w, a0);
  QPoly c = qpoly_exact_div(w.derivative(), a0);
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly f = qpoly_gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f.to_primitive_int(), i);
    b = qpoly_exact_div(b, f);
    c = qpoly_exact_div(d, f);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0;
  }
  return false;
}

} // namespace inoue
