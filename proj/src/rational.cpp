#include "pbell/rational.hpp"

#include <cctype>

namespace pbell {

namespace {

bool is_valid_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_valid_integer_token(num) ||
      (slash != std::string_view::npos && !is_valid_integer_token(den))) {
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  }
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational rational_pow(const Rational& q, unsigned long k) {
  Rational acc(1);
  Rational base = q;
  unsigned long e = k;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace pbell
