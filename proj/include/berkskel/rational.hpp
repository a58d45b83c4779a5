#ifndef BERKSKEL_RATIONAL_HPP
#define BERKSKEL_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace berkskel {

/// Exact rational, always kept in lowest terms by the backend.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p/q", "p" or "-p/q". Throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1/4,1/6".
std::vector<Rational> parse_rational_list(std::string_view text);

/// "p/q", or "p" for integers.
std::string to_string(const Rational& value);

std::string join(const std::vector<Rational>& values, std::string_view sep = ",");

}  // namespace berkskel

#endif
