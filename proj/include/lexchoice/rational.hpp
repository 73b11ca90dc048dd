#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lexchoice {

// Exact arithmetic everywhere. cpp_rational keeps gcd-reduced form with a
// positive denominator, which is exactly the Rational invariant we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RatVector = std::vector<Rational>;

// "p/q", or just "p" when the denominator is 1. Never decimals.
std::string to_string(const Rational& r);

// Accepts "p", "p/q", optional leading sign; q must be a positive integer.
// Throws ParseError (with empty location) on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const RatVector& v);  // "(a, b, ...)" for diagnostics

Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const RatVector& v);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scaled(const RatVector& v, const Rational& s);

// Rescale to coprime integer entries. Positive factors only unless
// allow_sign_flip, in which case the first nonzero entry is made positive.
// Sign flips are reserved for sign-symmetric objects (subspace bases, rays of
// lines); separating functionals must keep their orientation.
RatVector canonical_scale(const RatVector& v, bool allow_sign_flip);

// Strict total order on vectors (entrywise, then by length); used to fix
// deterministic generator orderings.
bool lex_less(const RatVector& a, const RatVector& b);

}  // namespace lexchoice
