#pragma once

#include <utility>
#include <vector>

#include "inoue/int_poly.hpp"

namespace inoue {

// Factorization over Q of a nonzero integer polynomial (content dropped):
// irreducible primitive factors with positive leading coefficients and
// their multiplicities, sorted by poly_less. Pipeline: squarefree split,
// factorizations modulo several small primes with a degree-pattern screen,
// then Hensel lifting and subset recombination. Intended for the degrees
// this library meets (characteristic and unit polynomials, <= ~15).
std::vector<std::pair<IntPoly, int>> factorize(const IntPoly& p);

// True when p (degree >= 1) is irreducible over Q.
bool is_irreducible(const IntPoly& p);

} // namespace inoue
