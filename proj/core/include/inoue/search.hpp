#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "inoue/spectral.hpp"

namespace inoue {

// SplitMix64: counter-based, splittable by seeding each trial index
// independently (state = splitmix(seed + GOLDEN * index)), so parallel and
// serial searches produce identical streams.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(seed + 0x9e3779b97f4a7c15ull * (trial + 1));
  }
  std::uint64_t next();
  // Uniform in [lo, hi] inclusive.
  long next_in(long lo, long hi);

private:
  std::uint64_t state_;
};

enum class SearchMode { companion, conjugated_companion, block_nondiag };

const char* search_mode_name(SearchMode m);

struct SearchConfig {
  int dim = 3;             // odd, >= 3 (>= 7 for block_nondiag)
  long entry_bound = 3;    // coefficient bound for the random draws
  int count = 1;
  std::uint64_t seed = 0;
  SearchMode mode = SearchMode::companion;
  long max_attempts = 0;   // 0: derived from count
};

struct SearchHit {
  IntMatrix matrix;
  TypeICertificate certificate;
};

struct SearchOutcome {
  std::vector<SearchHit> hits;
  long attempts = 0;
};

// Draw random matrices of the configured shape and keep those the type-I
// check accepts. Deterministic for a fixed config.
SearchOutcome search_type_I(const SearchConfig& cfg);

struct BlockRejection {
  std::string reason;
};

// Guaranteed type-I, non-diagonalizable instance: block-diag of the
// companion of f and the companion of g^2 (so g^2 divides the minimal
// polynomial). Preconditions: f odd degree with exactly one (simple,
// irrational) real root and f(0) = -1; g without real roots and |g(0)| = 1;
// f(1) g(1) != 0.
std::variant<IntMatrix, BlockRejection> make_nondiagonalizable(const IntPoly& f, const IntPoly& g);

} // namespace inoue
