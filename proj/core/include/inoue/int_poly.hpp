#pragma once

#include <string>
#include <utility>
#include <vector>

#include "inoue/integers.hpp"

namespace inoue {

// Dense univariate polynomial over Z, coefficients indexed by degree.
// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }
  static IntPoly x() { return IntPoly({Int(0), Int(1)}); }
  static IntPoly monomial(Int coeff, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const Int& leading() const;
  const Int& coeff(int i) const; // 0 beyond the degree
  const std::vector<Int>& coeffs() const { return c_; }
  void set_coeff(int i, Int v);

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& k) const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly derivative() const;
  IntPoly pow(unsigned e) const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;

  // Content (>= 0; 0 only for the zero polynomial) and the primitive part
  // normalized to a positive leading coefficient.
  Int content() const;
  IntPoly primitive_part() const;

  // Coefficients reversed: x^d * p(1/x).
  IntPoly reversed() const;

  std::string to_string(const std::string& var = "x") const;

private:
  void normalize();
  std::vector<Int> c_;
};

// Exact quotient; raises internal_inconsistency when the division is not exact.
IntPoly exact_div(const IntPoly& num, const IntPoly& den);

// Long division by a monic divisor; exact over Z, no fractions appear.
void divrem_monic(const IntPoly& num, const IntPoly& den, IntPoly& q, IntPoly& r);

// Pseudo-remainder prem(f, g) = (lc(g)^(deg f - deg g + 1) * f) mod g.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g);

// Polynomial gcd over Z (content included), positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'), primitive with positive leading coefficient: the same
// roots, all simple. Raises invalid_input on the zero polynomial.
IntPoly squarefree_part(const IntPoly& p);

// Yun decomposition p = +/- content * prod f_i^i with the f_i pairwise
// coprime, squarefree, primitive; factors with f_i == 1 are omitted.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Deterministic order used wherever factor lists need a canonical sort:
// by degree, then lexicographically on coefficients from degree 0 up.
bool poly_less(const IntPoly& a, const IntPoly& b);

} // namespace inoue
