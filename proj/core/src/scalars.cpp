#include "torkit/scalars.hpp"

#include <cctype>
#include <stdexcept>

namespace torkit {

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      throw std::invalid_argument("invalid character in rational literal: '" + text + "'");
    }
  }
  Rational value;
  if (mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string rational_str(const Rational& value) { return value.get_str(); }

std::string integer_str(const Integer& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer floor_rational(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational mod_positive(const Rational& value, const Rational& modulus) {
  if (modulus <= 0) {
    throw std::invalid_argument("mod_positive requires a positive modulus");
  }
  Rational ratio = value / modulus;
  Rational result = value - Rational(floor_rational(ratio)) * modulus;
  result.canonicalize();
  return result;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace torkit
