#pragma once

#include <stdexcept>
#include <string>

namespace inoue {

enum class errc {
  invalid_input,          // malformed file, bad configuration, broken precondition
  entry_size_limit,       // intermediate integer exceeded the bit-length cap
  endpoint_is_root,       // Sturm query with a root at an interval endpoint
  zero_divisor,           // non-invertible element: the modulus is reducible
  precision_exhausted,    // certification failed at the requested bits; retry higher
  hypothesis_violated,    // documented mathematical hypothesis does not hold
  internal_inconsistency, // a certified identity failed to re-verify: a bug
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

const char* errc_name(errc code) noexcept;

// Guardrail against runaway intermediate growth. Long-running eliminations
// and lifts check their intermediates against this cap and raise
// entry_size_limit instead of exhausting memory. Default is 1,000,000 bits.
long bit_length_cap() noexcept;
void set_bit_length_cap(long bits) noexcept;

} // namespace inoue
