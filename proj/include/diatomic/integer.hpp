#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace diatomic {

// Arbitrary-precision signed integer. Where a value is documented as Nat it
// is nonnegative by contract.
using Integer = boost::multiprecision::cpp_int;
using Nat = Integer;
using Rational = boost::multiprecision::cpp_rational;

Integer pow2(std::size_t n);
Integer gcd(const Integer& a, const Integer& b);

// Largest s with s*s <= v. v must be nonnegative.
Integer isqrt(const Integer& v);
bool is_perfect_square(const Integer& v);

// Floor division for any signs, den != 0.
Integer floor_div(const Integer& num, const Integer& den);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace diatomic
