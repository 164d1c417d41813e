#pragma once

#include <vector>

#include "inoue/dyadic.hpp"
#include "inoue/int_poly.hpp"

namespace inoue {

// Open interval (lo, hi) around exactly one distinct real root; neither
// endpoint is a root. multiplicity is the root's multiplicity in the
// polynomial the interval was isolated for.
struct RealIsolatingInterval {
  Rat lo, hi;
  int multiplicity = 1;
};

// Axis-aligned rational box around exactly one distinct root. Real roots
// get degenerate boxes with im_lo == im_hi == 0; non-real roots come in
// conjugate mirror pairs.
struct ComplexBox {
  Rat re_lo, re_hi, im_lo, im_hi;
  int multiplicity = 1;

  bool is_real_root() const { return im_lo == 0 && im_hi == 0; }
  ComplexBox conjugate() const { return ComplexBox{re_lo, re_hi, -im_hi, -im_lo, multiplicity}; }
  DyadicComplexInterval to_ball(long prec) const;
};

// Sign-variation chain of p: reusable for many count queries.
class SturmChain {
public:
  explicit SturmChain(const IntPoly& p);
  // Distinct real roots in (lo, hi]; endpoints that are roots of the
  // squarefree part raise endpoint_is_root.
  int count(const Rat& lo, const Rat& hi) const;
  int count_all() const; // all distinct real roots
  const IntPoly& polynomial() const { return chain_.front(); }
  const Rat& root_bound() const { return bound_; } // strict bound on |roots|

private:
  int variations_at(const Rat& x) const;
  std::vector<IntPoly> chain_;
  Rat bound_;
};

// Exact count of distinct real roots of p in (lo, hi).
int sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi);

// Disjoint isolating intervals for every distinct real root of p, sorted
// ascending, with multiplicities recovered from the squarefree split.
std::vector<RealIsolatingInterval> isolate_real_roots(const IntPoly& p);

// Shrink an isolating interval to a dyadic enclosure of width <= 2^-bits by
// bisection with exact sign evaluation.
DyadicInterval refine_real(const IntPoly& p, const RealIsolatingInterval& iso, long bits);

// Certified boxes of width <= 2^-bits around every distinct root of p (real
// roots as degenerate boxes on the axis, non-real roots as mirror pairs),
// pairwise disjoint, multiplicities attached. Certification is by exact
// Sturm counts on the real axis and Krawczyk contraction off it; the
// floating-point start is only a hint and never trusted.
std::vector<ComplexBox> enclose_complex_roots(const IntPoly& p, long bits);

// Ball evaluation helpers used by the spectral layer.
DyadicInterval eval_ball(const IntPoly& p, const DyadicInterval& x, long prec);
DyadicComplexInterval eval_ball(const IntPoly& p, const DyadicComplexInterval& z, long prec);

} // namespace inoue
