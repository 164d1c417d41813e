#include "inoue/errors.hpp"

#include <atomic>

namespace inoue {

namespace {
std::atomic<long> g_bit_cap{1000000};
}

long bit_length_cap() noexcept { return g_bit_cap.load(std::memory_order_relaxed); }
void set_bit_length_cap(long bits) noexcept { g_bit_cap.store(bits, std::memory_order_relaxed); }

const char* errc_name(errc code) noexcept {
  switch (code) {
  case errc::invalid_input: return "invalid-input";
  case errc::entry_size_limit: return "entry-size-limit";
  case errc::endpoint_is_root: return "endpoint-is-root";
  case errc::zero_divisor: return "zero-divisor";
  case errc::precision_exhausted: return "precision-exhausted";
  case errc::hypothesis_violated: return "hypothesis-violated";
  case errc::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

} // namespace inoue
