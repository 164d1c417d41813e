#pragma once

#include <vector>

#include "inoue/integers.hpp"

namespace inoue {

// In-place LLL reduction of the rows of `basis` (independent integer
// vectors), delta = 99/100, exact rational Gram-Schmidt. Returns the
// unimodular transform T with new = T * old.
std::vector<std::vector<Int>> lll_reduce(std::vector<std::vector<Int>>& basis);

} // namespace inoue
