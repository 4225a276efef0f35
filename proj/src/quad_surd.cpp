#include "diatomic/quad_surd.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace diatomic {

namespace {

int rational_sign(const Rational& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

}  // namespace

QuadSurd::QuadSurd(Rational r) : r_(std::move(r)) {}

QuadSurd::QuadSurd(Rational r, Rational s, Integer d) : r_(std::move(r)), s_(std::move(s)), d_(std::move(d)) {
    if (s_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ <= 0 || is_perfect_square(d_)) throw std::invalid_argument("radicand must be a positive non-square");
    // small square factors only; enough for readable output
    for (unsigned p = 2; p <= 1000 && Integer(p * p) <= d_; ++p) {
        while (d_ % (p * p) == 0) {
            d_ /= p * p;
            s_ *= p;
        }
    }
}

QuadSurd QuadSurd::rebased(const Integer& d) const {
    if (is_rational() || d_ == d) return *this;
    // sqrt(d_) = sqrt(d_ d) / d * sqrt(d) when d_ d is a square
    Integer prod = d_ * d;
    if (!is_perfect_square(prod)) throw std::invalid_argument("mixed quadratic fields");
    return QuadSurd(r_, s_ * Rational(isqrt(prod), d), d);
}

Integer QuadSurd::common_radicand(const QuadSurd& x, const QuadSurd& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational()) return x.d_;
    return std::min(x.d_, y.d_);
}

int QuadSurd::sign() const {
    int rs = rational_sign(r_);
    int ss = rational_sign(s_);
    if (ss == 0) return rs;
    if (rs == 0 || rs == ss) return ss;
    // Opposite signs: compare r^2 with s^2 d.
    Rational lhs = r_ * r_;
    Rational rhs = s_ * s_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? rs : ss;
}

QuadSurd QuadSurd::conjugate() const { return is_rational() ? *this : QuadSurd(r_, -s_, d_); }

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    Integer d = QuadSurd::common_radicand(x, y);
    QuadSurd u = x.rebased(d);
    QuadSurd v = y.rebased(d);
    return QuadSurd(u.r_ + v.r_, u.s_ + v.s_, d);
}

QuadSurd operator-(const QuadSurd& x) { return x.is_rational() ? QuadSurd(-x.r_) : QuadSurd(-x.r_, -x.s_, x.d_); }

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    Integer d = QuadSurd::common_radicand(x, y);
    QuadSurd u = x.rebased(d);
    QuadSurd v = y.rebased(d);
    Rational r = u.r_ * v.r_ + u.s_ * v.s_ * Rational(d);
    Rational s = u.r_ * v.s_ + u.s_ * v.r_;
    return QuadSurd(r, s, d);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
    if (y.sign() == 0) throw std::domain_error("division by zero");
    // x / y = x * conj(y) / norm(y)
    Rational norm = y.r_ * y.r_ - y.s_ * y.s_ * Rational(y.d_);
    QuadSurd num = x * y.conjugate();
    return QuadSurd(num.r_ / norm, num.s_ / norm, num.d_);
}

bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() == 0; }

std::string QuadSurd::to_string() const {
    if (is_rational()) return diatomic::to_string(r_);
    std::string out;
    if (r_ != 0) out = diatomic::to_string(r_) + (s_ < 0 ? " - " : " + ");
    else if (s_ < 0) out = "-";
    Rational mag = s_ < 0 ? Rational(-s_) : s_;
    if (mag != 1) out += diatomic::to_string(mag) + "*";
    return out + "sqrt(" + d_.str() + ")";
}

double QuadSurd::approx() const {
    using Float = boost::multiprecision::cpp_bin_float_50;
    Float r = Float(boost::multiprecision::numerator(r_)) / Float(boost::multiprecision::denominator(r_));
    Float s = Float(boost::multiprecision::numerator(s_)) / Float(boost::multiprecision::denominator(s_));
    return static_cast<double>(r + s * sqrt(Float(d_)));
}

}  // namespace diatomic
