#include "m2z/integer.hpp"

#include <functional>

#include "m2z/error.hpp"

namespace m2z {

Int parse_int(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n\r");
  const auto last = text.find_last_not_of(" \t\n\r");
  std::string trimmed(first == std::string_view::npos ? std::string_view{}
                                                      : text.substr(first, last - first + 1));
  std::size_t pos = 0;
  if (!trimmed.empty() && (trimmed[0] == '-' || trimmed[0] == '+')) pos = 1;
  if (pos == trimmed.size()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < trimmed.size(); ++i) {
    if (trimmed[i] < '0' || trimmed[i] > '9') {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  if (trimmed[0] == '+') trimmed.erase(0, 1);
  return Int(trimmed, 10);
}

std::string to_string(const Int& value) { return value.get_str(10); }

Int gcd(const Int& x, const Int& y) {
  Int out;
  mpz_gcd(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return out;
}

Int pow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Int isqrt(const Int& value) {
  if (value < 0) throw PreconditionError("isqrt of a negative integer");
  Int out;
  mpz_sqrt(out.get_mpz_t(), value.get_mpz_t());
  return out;
}

bool divides(const Int& divisor, const Int& value) {
  if (divisor == 0) return value == 0;
  return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

Int exact_div(const Int& value, const Int& divisor) {
  Int out;
  mpz_divexact(out.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  return out;
}

std::size_t hash_value(const Int& value) {
  const mpz_srcptr raw = value.get_mpz_t();
  std::size_t h = std::hash<int>{}(raw->_mp_size);
  const int limbs = raw->_mp_size < 0 ? -raw->_mp_size : raw->_mp_size;
  for (int i = 0; i < limbs; ++i) {
    h ^= std::hash<mp_limb_t>{}(raw->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace m2z
