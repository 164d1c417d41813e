#pragma once

#include <optional>
#include <string>

#include "inoue/integers.hpp"

namespace inoue {

// Dyadic rational m * 2^e. Exact: addition and multiplication never round.
struct Dyadic {
  Int m{0};
  long e{0};

  Dyadic() = default;
  Dyadic(Int mant, long exp);
  static Dyadic from_int(Int v) { return Dyadic(std::move(v), 0); }
  static Dyadic one_shifted(long exp) { return Dyadic(Int(1), exp); } // 2^exp

  bool is_zero() const { return m == 0; }
  int sgn() const { return sign_of(m); }
  Rat to_rat() const;
  double to_double() const;
  std::string to_string() const; // "m*2^e"

  Dyadic operator-() const { return Dyadic(-m, e); }
  Dyadic abs_value() const { return Dyadic(abs(m), e); }
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  Dyadic half() const { return Dyadic(m, e - 1); }

  // Keep at most max_bits mantissa bits, rounding in the given direction.
  Dyadic round_down(long max_bits) const; // toward -inf
  Dyadic round_up(long max_bits) const;   // toward +inf
};

int cmp(const Dyadic& a, const Dyadic& b);

// Directed conversion from a rational: result <= v (down) or >= v (up),
// within 2^-prec of v.
Dyadic dyadic_from_rat(const Rat& v, long prec, bool round_up);

// Ball x = center +/- radius with dyadic center and radius. All operations
// round outward, so the result always encloses the exact image.
struct DyadicInterval {
  Dyadic c;
  Dyadic r; // >= 0

  DyadicInterval() = default;
  DyadicInterval(Dyadic center, Dyadic radius);
  static DyadicInterval exact(Dyadic v) { return DyadicInterval(std::move(v), Dyadic()); }
  static DyadicInterval from_int(const Int& v) { return exact(Dyadic::from_int(v)); }
  static DyadicInterval from_endpoints(const Dyadic& lo, const Dyadic& hi);
  static DyadicInterval from_rat(const Rat& v, long prec);
  static DyadicInterval from_rat_endpoints(const Rat& lo, const Rat& hi, long prec);

  Dyadic lo() const { return c - r; }
  Dyadic hi() const { return c + r; }
  Dyadic width() const { return r + r; }
  bool is_exact() const { return r.is_zero(); }

  bool contains_zero() const;
  bool excludes_zero() const;
  int sign() const;                  // defined when zero is excluded or width 0
  bool contains(const Dyadic& v) const;
  bool contains(const Rat& v) const;
  bool contains_interval(const DyadicInterval& o) const;
  bool strictly_inside(const DyadicInterval& outer) const;
  bool intersects(const DyadicInterval& o) const;

  Dyadic mag_upper() const { return c.abs_value() + r; } // >= sup |x|
  Dyadic mig_lower() const;                              // <= inf |x|, >= 0

  // Compress mantissas to about prec bits, growing the radius to cover.
  DyadicInterval rounded(long prec) const;
  DyadicInterval operator-() const { return DyadicInterval(-c, r); }
};

DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, long prec);
DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, long prec);
DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, long prec);
DyadicInterval mul_exact_scalar(const DyadicInterval& a, const Dyadic& s);
DyadicInterval recip(const DyadicInterval& a, long prec); // zero must be excluded
DyadicInterval div(const DyadicInterval& a, const DyadicInterval& b, long prec);
std::optional<DyadicInterval> intersect(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b);

// Rectangle complex ball: independent enclosures of the real and imaginary
// parts.
struct DyadicComplexInterval {
  DyadicInterval re, im;

  DyadicComplexInterval() = default;
  DyadicComplexInterval(DyadicInterval re_in, DyadicInterval im_in)
      : re(std::move(re_in)), im(std::move(im_in)) {}
  static DyadicComplexInterval from_real(DyadicInterval x) {
    return DyadicComplexInterval(std::move(x), DyadicInterval());
  }
  static DyadicComplexInterval exact_point(Dyadic re_v, Dyadic im_v) {
    return DyadicComplexInterval(DyadicInterval::exact(std::move(re_v)),
                                 DyadicInterval::exact(std::move(im_v)));
  }

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  DyadicComplexInterval conj() const { return DyadicComplexInterval(re, -im); }
  DyadicComplexInterval operator-() const { return DyadicComplexInterval(-re, -im); }
  Dyadic width_max() const;
  bool strictly_inside(const DyadicComplexInterval& outer) const {
    return re.strictly_inside(outer.re) && im.strictly_inside(outer.im);
  }
  bool intersects(const DyadicComplexInterval& o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }
};

DyadicComplexInterval add(const DyadicComplexInterval& a, const DyadicComplexInterval& b, long prec);
DyadicComplexInterval sub(const DyadicComplexInterval& a, const DyadicComplexInterval& b, long prec);
DyadicComplexInterval mul(const DyadicComplexInterval& a, const DyadicComplexInterval& b, long prec);
DyadicInterval norm_sq(const DyadicComplexInterval& a, long prec); // |z|^2
DyadicComplexInterval recip(const DyadicComplexInterval& a, long prec);
DyadicComplexInterval div(const DyadicComplexInterval& a, const DyadicComplexInterval& b, long prec);
std::optional<DyadicComplexInterval> intersect(const DyadicComplexInterval& a,
                                               const DyadicComplexInterval& b);

} // namespace inoue
