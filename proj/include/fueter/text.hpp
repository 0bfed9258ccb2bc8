#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fueter/paravector.hpp"

namespace fueter {

/// Blade name such as "e12"; indices are joined with '_' once any exceeds 9.
std::string blade_name(Blade b);

/// `coeff*e{indices}` terms joined by " + " / " - ", e.g. "2 + 3*e1 + 1*e12".
/// Terms are ordered by grade, then lexicographically; zero prints as "0".
std::string format(const Multivector<Rational>& m);
std::string format(const Multivector<double>& m);
std::string format(const Paravector<Rational>& p);

/// Comma separated components "x0,x1,...,xn", the CLI point syntax.
std::string format_components(const Paravector<Rational>& p);
std::string format_components(const Paravector<double>& p);

/// Inverse of format(); also accepts bare blades ("e1") and unsorted
/// generator lists ("e21" == -e12).
Multivector<Rational> parse_multivector(std::string_view text, unsigned n);

/// Comma separated "x0,x1,...,xn"; exactly n+1 components are required.
Paravector<Rational> parse_paravector(std::string_view text, unsigned n);
std::vector<Rational> parse_components(std::string_view text);

/// Blades sorted by grade then by index list.
std::vector<Blade> canonical_blade_order(unsigned n);

}  // namespace fueter
