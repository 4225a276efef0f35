#include "diatomic/integer.hpp"

namespace diatomic {

Integer pow2(std::size_t n) {
    Integer v = 1;
    v <<= n;
    return v;
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

Integer isqrt(const Integer& v) {
    return boost::multiprecision::sqrt(v);
}

bool is_perfect_square(const Integer& v) {
    if (v < 0) return false;
    Integer s = isqrt(v);
    return s * s == v;
}

Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;
    if (q * den != num && ((num < 0) != (den < 0))) --q;
    return q;
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
    const Integer& den = boost::multiprecision::denominator(v);
    if (den == 1) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

}  // namespace diatomic
