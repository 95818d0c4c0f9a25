#include "coxchar/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace coxchar {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Rational r(std::string(num) + "/" + std::string(den));
  if (r.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& value) {
  return value.get_str();
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  Rational b = base;
  unsigned long e;
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    mpq_inv(b.get_mpq_t(), base.get_mpq_t());
    e = static_cast<unsigned long>(-(exp + 1)) + 1ul;
  } else {
    e = static_cast<unsigned long>(exp);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), e);
  // num/den were coprime, so powers are coprime as well; sign already in num.
  return out;
}

}  // namespace coxchar
