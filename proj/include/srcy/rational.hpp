#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace srcy {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

// "p/q", or "p" when the denominator is 1
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// accepts "p", "-p", "p/q"
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);
Integer floor_div(const Integer& a, const Integer& b);
Integer binomial(long long n, long long k);

} // namespace srcy
