#include "symcubic/rational.hpp"

#include <cctype>

#include "symcubic/errors.hpp"

namespace symcubic {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw InvalidInput("not an integer literal: '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den[0] == '-' || den[0] == '+')) {
    throw InvalidInput("denominator must be unsigned: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return to_fraction_string();
}

std::optional<std::uint32_t> Rational::mod(std::uint32_t p) const {
  const Integer modulus(static_cast<unsigned long>(p));
  Integer den = value_.get_den();
  den %= modulus;
  if (den == 0) return std::nullopt;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer num = value_.get_num();
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
  Integer r = (num * inv) % modulus;
  return static_cast<std::uint32_t>(r.get_ui());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidInput("division by zero rational");
  value_ /= o.value_;
  return *this;
}

}  // namespace symcubic
