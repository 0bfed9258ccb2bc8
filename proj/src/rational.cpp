#include "fueter/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "fueter/error.hpp"

namespace fueter {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroNorm("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw ParseError("non-finite value cannot be made exact");
  Rational r;
  mpq_set_d(r.q_.get_mpq_t(), v);
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t pos = 0;
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  s = s.substr(pos);
  if (s.empty()) throw ParseError("empty number");

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational num = parse(s.substr(0, slash));
    Rational den = parse(s.substr(slash + 1));
    if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
    return num / den;
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long exponent = 0;
  bool any_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --exponent;
      any_digit = true;
    }
  }
  if (!any_digit) throw ParseError("malformed number '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(i), &used);
    } catch (const std::exception&) {
      throw ParseError("malformed exponent in '" + s + "'");
    }
    i += used;
    exponent += e;
  }
  if (i != s.size()) throw ParseError("trailing characters in '" + s + "'");

  BigInt mant(digits, 10);
  if (negative) mant = -mant;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return Rational(BigInt(mant * scale));
  return Rational(mant, scale);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroNorm("division by zero rational");
  q_ /= o.q_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
}

std::string Rational::to_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace fueter
