#include "diatomic/theta.hpp"

#include "diatomic/error.hpp"

namespace diatomic {

ThetaValue::ThetaValue(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ <= 0 || num_ < 0 || num_ > den_)
        throw Error(Errc::OutOfRange, num_.str() + "/" + den_.str() + " is not in [0, 1]");
    Integer g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

ThetaValue ThetaValue::dyadic(const Nat& m, std::size_t n) { return ThetaValue(m, pow2(n)); }

ThetaValue ThetaValue::from_rational(const Rational& r) {
    return ThetaValue(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

std::optional<std::size_t> ThetaValue::dyadic_exponent() const {
    if ((den_ & (den_ - 1)) != 0) return std::nullopt;
    return boost::multiprecision::msb(den_);
}

std::string ThetaValue::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

}  // namespace diatomic
