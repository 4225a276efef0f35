#include "diatomic/ext_rational.hpp"

#include "diatomic/error.hpp"

namespace diatomic {

ExtRational::ExtRational(long long v) : ExtRational(Integer(v), Integer(1)) {}

ExtRational::ExtRational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ == 0 && den_ == 0) throw Error(Errc::Indeterminate, "0/0");
    if (num_ < 0 || den_ < 0) throw Error(Errc::OutOfRange, "negative value " + num_.str() + "/" + den_.str());
    if (den_ == 0) {
        num_ = 1;
        return;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExtRational ExtRational::infinity() { return ExtRational(1, 0); }

ExtRational ExtRational::from_rational(const Rational& r) {
    return ExtRational(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

Rational ExtRational::to_rational() const {
    if (is_infinite()) throw Error(Errc::OutOfRange, "infinite value has no rational form");
    return Rational(num_, den_);
}

ExtRational ExtRational::reciprocal() const { return ExtRational(den_, num_); }

std::string ExtRational::to_string() const {
    if (is_infinite()) return "inf";
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::strong_ordering operator<=>(const ExtRational& x, const ExtRational& y) {
    Integer lhs = x.num_ * y.den_;
    Integer rhs = y.num_ * x.den_;
    if (x.is_infinite() && y.is_infinite()) return std::strong_ordering::equal;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExtRational operator+(const ExtRational& x, const ExtRational& y) {
    if (x.is_infinite() || y.is_infinite()) return ExtRational::infinity();
    return ExtRational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

ExtRational operator*(const ExtRational& x, const ExtRational& y) {
    if ((x.is_infinite() && y.is_zero()) || (x.is_zero() && y.is_infinite()))
        throw Error(Errc::Indeterminate, "0 * inf");
    return ExtRational(x.num_ * y.num_, x.den_ * y.den_);
}

ExtRational operator/(const ExtRational& x, const ExtRational& y) { return x * y.reciprocal(); }

ExtRational difference(const ExtRational& x, const ExtRational& y) {
    if (x.is_infinite() || y.is_infinite()) throw Error(Errc::Indeterminate, "difference with inf");
    Integer num = x.num() * y.den() - y.num() * x.den();
    if (num < 0) throw Error(Errc::OutOfRange, "negative difference");
    return ExtRational(num, x.den() * y.den());
}

}  // namespace diatomic
