#include "fueter/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fueter {

namespace {

std::vector<unsigned> blade_indices(Blade b) {
  std::vector<unsigned> idx;
  for (unsigned i = 0; b != 0; ++i, b >>= 1)
    if (b & 1U) idx.push_back(i + 1);
  return idx;
}

template <class R, class Neg, class Abs>
std::string format_terms(const Multivector<R>& m, Neg is_negative, Abs abs_text) {
  std::string out;
  for (Blade b : canonical_blade_order(m.dim())) {
    const R& c = m[b];
    if (RingTraits<R>::is_exact_zero(c)) continue;
    const bool neg = is_negative(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += abs_text(c);
    if (b != 0) out += "*" + blade_name(b);
  }
  return out.empty() ? "0" : out;
}

void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::string_view take_number(std::string_view s, std::size_t& i) {
  const std::size_t start = i;
  auto digits = [&] {
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
  };
  digits();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E') && i + 1 < s.size() &&
      (std::isdigit(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '-' || s[i + 1] == '+')) {
    ++i;
    if (s[i] == '-' || s[i] == '+') ++i;
    digits();
  }
  if (i < s.size() && s[i] == '/') {
    ++i;
    digits();
  }
  return s.substr(start, i - start);
}

Multivector<Rational> take_blade(std::string_view s, std::size_t& i, unsigned n) {
  ++i;  // 'e'
  Multivector<Rational> acc = Multivector<Rational>::scalar(n, Rational(1));
  const std::size_t start = i;
  const bool separated = [&] {
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
      if (s[j] == '_') return true;
      ++j;
    }
    return false;
  }();
  while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
    if (s[i] == '_') {
      ++i;
      continue;
    }
    unsigned idx = 0;
    if (separated) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        idx = idx * 10 + static_cast<unsigned>(s[i++] - '0');
    } else {
      idx = static_cast<unsigned>(s[i++] - '0');
    }
    if (idx < 1 || idx > n) throw ParseError("generator index out of range in blade");
    acc = acc * Multivector<Rational>::generator(n, idx);
  }
  if (i == start) throw ParseError("blade without indices");
  return acc;
}

}  // namespace

std::vector<Blade> canonical_blade_order(unsigned n) {
  std::vector<Blade> blades(std::size_t{1} << n);
  for (Blade b = 0; b < blades.size(); ++b) blades[b] = b;
  std::sort(blades.begin(), blades.end(), [](Blade a, Blade b) {
    if (blade_grade(a) != blade_grade(b)) return blade_grade(a) < blade_grade(b);
    return blade_indices(a) < blade_indices(b);
  });
  return blades;
}

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  const auto idx = blade_indices(b);
  const bool wide = idx.back() > 9;
  std::string out = "e";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k > 0) out += "_";
    out += std::to_string(idx[k]);
  }
  return out;
}

std::string format(const Multivector<Rational>& m) {
  return format_terms(
      m, [](const Rational& c) { return c.sign() < 0; },
      [](const Rational& c) { return (c.sign() < 0 ? -c : c).to_string(); });
}

std::string format(const Multivector<double>& m) {
  return format_terms(
      m, [](double c) { return c < 0; },
      [](double c) { return RingTraits<double>::to_string(c < 0 ? -c : c); });
}

std::string format_components(const Paravector<Rational>& p) {
  std::string out;
  for (const Rational& c : p.components()) {
    if (!out.empty()) out += ",";
    out += c.to_string();
  }
  return out;
}

std::string format_components(const Paravector<double>& p) {
  std::string out;
  for (double c : p.components()) {
    if (!out.empty()) out += ",";
    out += RingTraits<double>::to_string(c);
  }
  return out;
}

std::string format(const Paravector<Rational>& p) {
  return format_components(p);
}

Multivector<Rational> parse_multivector(std::string_view s, unsigned n) {
  Multivector<Rational> out(n);
  std::size_t i = 0;
  bool first = true;
  skip_space(s, i);
  if (i == s.size()) throw ParseError("empty multivector");
  while (true) {
    skip_space(s, i);
    if (i == s.size()) break;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
      skip_space(s, i);
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms");
    }
    first = false;
    if (i == s.size()) throw ParseError("dangling sign");

    Multivector<Rational> term(n);
    if (s[i] == 'e') {
      term = take_blade(s, i, n);
    } else {
      const auto num = take_number(s, i);
      if (num.empty()) throw ParseError("expected a coefficient");
      const Rational c = Rational::parse(num);
      skip_space(s, i);
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_space(s, i);
        if (i == s.size() || s[i] != 'e') throw ParseError("expected blade after '*'");
        term = c * take_blade(s, i, n);
      } else {
        term = Multivector<Rational>::scalar(n, c);
      }
    }
    if (negative) term = -term;
    out += term;
  }
  return out;
}

std::vector<Rational> parse_components(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Paravector<Rational> parse_paravector(std::string_view text, unsigned n) {
  auto c = parse_components(text);
  if (c.size() != n + 1) {
    std::ostringstream msg;
    msg << "paravector needs " << n + 1 << " components, got " << c.size();
    throw ParseError(msg.str());
  }
  return Paravector<Rational>::from_components(c);
}

}  // namespace fueter
