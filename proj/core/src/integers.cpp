#include "inoue/integers.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace inoue {

std::size_t bit_size(const Int& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

void guard_bits(const Int& v) {
  if (static_cast<long>(bit_size(v)) > bit_length_cap())
    fail(errc::entry_size_limit,
         "intermediate integer exceeds the bit-length cap of " + std::to_string(bit_length_cap()) + " bits");
}

int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
int sign_of(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(errc::invalid_input, "empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num, den;
    if (mpz_set_str(num.get_mpz_t(), s.substr(0, slash).c_str(), 10) != 0 ||
        mpz_set_str(den.get_mpz_t(), s.substr(slash + 1).c_str(), 10) != 0 || den == 0)
      fail(errc::invalid_input, "bad rational literal '" + text + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  // Decimal / scientific form: sign, digits, optional fraction, optional exponent.
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = (s[pos++] == '-');
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    exp10 = std::strtol(s.c_str() + pos + 1, nullptr, 10);
    pos = s.size();
  }
  if (!seen_digit || pos != s.size()) fail(errc::invalid_input, "bad rational literal '" + text + "'");

  Int mant(digits.empty() ? "0" : digits);
  if (neg) mant = -mant;
  long e = exp10 - frac_digits;
  Rat r(mant);
  Int p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0)
    r *= Rat(p10);
  else
    r /= Rat(p10);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& v) {
  std::ostringstream os;
  os << v.get_num();
  if (v.get_den() != 1) os << "/" << v.get_den();
  return os.str();
}

std::string decimal_preview(const Rat& v, int significant_digits) {
  if (v == 0) return "0";
  mpf_class f(v, 64 + 4 * significant_digits);
  mp_exp_t exp10 = 0;
  std::string mant = f.get_str(exp10, 10, significant_digits);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string d = neg ? mant.substr(1) : mant;
  std::ostringstream os;
  if (neg) os << "-";
  if (exp10 >= 1 && exp10 <= significant_digits + 2 && static_cast<std::size_t>(exp10) <= d.size() + 6) {
    if (static_cast<std::size_t>(exp10) >= d.size()) {
      os << d << std::string(exp10 - d.size(), '0');
    } else {
      os << d.substr(0, exp10) << "." << d.substr(exp10);
    }
  } else if (exp10 <= 0 && exp10 > -5) {
    os << "0." << std::string(static_cast<std::size_t>(-exp10), '0') << d;
  } else {
    os << d.substr(0, 1);
    if (d.size() > 1) os << "." << d.substr(1);
    os << "e" << (exp10 - 1);
  }
  return os.str();
}

} // namespace inoue
