#pragma once

#include <vector>

#include "inoue/int_poly.hpp"
#include "inoue/integers.hpp"

namespace inoue {

// Polynomial over Q. Support type for Yun's algorithm and for arithmetic in
// quotient rings Q[x]/(f); not part of the matrix-facing surface.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static QPoly from_int(const IntPoly& p);
  static QPoly constant(Rat v) { return QPoly({std::move(v)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& k) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  QPoly derivative() const;
  void make_monic();
  Rat eval(const Rat& x) const;

  // Clears denominators and strips content: primitive, positive leading.
  IntPoly to_primitive_int() const;

private:
  void normalize();
  std::vector<Rat> c_;
};

// Euclidean division: num = q * den + r with deg r < deg den.
void qpoly_divrem(const QPoly& num, const QPoly& den, QPoly& q, QPoly& r);
QPoly qpoly_exact_div(const QPoly& num, const QPoly& den);
// Monic gcd.
QPoly qpoly_gcd(QPoly a, QPoly b);
// g = gcd(a, b) monic, with g = s*a + t*b.
QPoly qpoly_ext_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);

} // namespace inoue
