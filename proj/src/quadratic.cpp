#include "diatomic/quadratic.hpp"

#include <map>
#include <utility>

#include "diatomic/error.hpp"
#include "diatomic/matrix.hpp"

namespace diatomic {

namespace {

void require_period(const FiniteDesign& p) {
    if (p.is_terminal() || p.length() < 2 || p.bits().find('0') == std::string::npos ||
        p.bits().find('1') == std::string::npos)
        throw Error(Errc::InvalidPeriod, "'" + p.to_string() + "' is not a valid period");
}

struct SignedMatrix {
    Integer a, b, c, d;

    friend SignedMatrix operator*(const SignedMatrix& x, const SignedMatrix& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

SignedMatrix as_signed(const UniModMatrix& m) { return {m.a(), m.b(), m.c(), m.d()}; }
SignedMatrix inverse(const UniModMatrix& m) { return {m.d(), -m.b(), -m.c(), m.a()}; }

QuadSurd mobius(const UniModMatrix& m, const QuadSurd& x) {
    return (QuadSurd(Rational(m.a())) * x + QuadSurd(Rational(m.b()))) /
           (QuadSurd(Rational(m.c())) * x + QuadSurd(Rational(m.d())));
}

std::string append_bits(std::string out, const std::vector<Nat>& qs, char& bit) {
    for (const Nat& q : qs) {
        out.append(q.convert_to<std::size_t>(), bit);
        bit = bit == '1' ? '0' : '1';
    }
    return out;
}

}  // namespace

QuadIrr::QuadIrr(Integer a2, Integer b1, Integer c0, RootSign sign)
    : a2_(std::move(a2)), b1_(std::move(b1)), c0_(std::move(c0)), sign_(sign) {
    if (a2_ == 0) throw Error(Errc::OutOfRange, "leading coefficient is zero");
    if (a2_ < 0) {
        a2_ = -a2_;
        b1_ = -b1_;
        c0_ = -c0_;
        sign_ = sign_ == RootSign::Plus ? RootSign::Minus : RootSign::Plus;
    }
    Integer g = gcd(gcd(a2_, b1_), c0_);
    a2_ /= g;
    b1_ /= g;
    c0_ /= g;
    Integer disc = discriminant();
    if (disc <= 0) throw Error(Errc::NonPositive, "equation has no two real roots");
    if (is_perfect_square(disc)) throw Error(Errc::PerfectSquare, "roots are rational");
}

QuadSurd QuadIrr::value() const {
    Rational s(1, 2 * a2_);
    return QuadSurd(Rational(b1_, 2 * a2_), sign_ == RootSign::Plus ? s : Rational(-s), discriminant());
}

QuadSurd QuadIrr::conjugate_value() const { return value().conjugate(); }

int QuadIrr::sign_at(const Rational& x) const {
    Rational v = Rational(a2_) * x * x - Rational(b1_) * x - Rational(c0_);
    return v < 0 ? -1 : (v > 0 ? 1 : 0);
}

std::string QuadIrr::equation_string() const {
    std::string out = a2_ == 1 ? "x^2" : a2_.str() + "x^2";
    auto term = [&out](const Integer& coef, const char* var) {
        if (coef == 0) return;
        Integer mag = coef < 0 ? Integer(-coef) : coef;
        out += coef < 0 ? " - " : " + ";
        if (mag != 1 || *var == '\0') out += mag.str();
        out += var;
    };
    term(-b1_, "x");
    term(-c0_, "");
    return out + " = 0";
}

QuadIrr quad_from_period(const FiniteDesign& period) {
    require_period(period);
    UniModMatrix m = sdm(period);
    return QuadIrr(m.c(), m.a() - m.d(), m.b(), RootSign::Plus);
}

QuadIrr quad_of_periodic(const PeriodicDesign& pd) {
    FiniteDesign period = FiniteDesign::word(pd.period());
    QuadIrr pure = quad_from_period(period);
    if (pd.is_purely_periodic()) return pure;

    UniModMatrix shift = sdm(FiniteDesign::word(pd.preperiod()));
    SignedMatrix n = as_signed(shift) * as_signed(sdm(period)) * inverse(shift);
    QuadSurd omega = mobius(shift, pure.value());
    QuadIrr plus(n.c, n.a - n.d, n.b, RootSign::Plus);
    if (plus.value() == omega) return plus;
    return QuadIrr(n.c, n.a - n.d, n.b, RootSign::Minus);
}

PeriodicCf periodic_cf(const SurdState& start) {
    if (start.q == 0) throw Error(Errc::OutOfRange, "zero denominator");
    if (start.d <= 0 || is_perfect_square(start.d)) throw Error(Errc::PerfectSquare, "radicand must be a non-square");
    SurdState s = start;
    if ((s.d - s.p * s.p) % s.q != 0) {
        Integer mag = s.q < 0 ? Integer(-s.q) : s.q;
        s = {s.p * mag, s.q * mag, s.d * mag * mag};
    }
    if (QuadSurd(Rational(s.p) / s.q, Rational(1) / s.q, s.d).sign() <= 0)
        throw Error(Errc::NonPositive, "continued fraction needs a positive value");

    const Integer root = isqrt(s.d);
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    std::vector<Nat> qs;
    while (seen.emplace(std::make_pair(s.p, s.q), qs.size()).second) {
        Integer a = s.q > 0 ? floor_div(s.p + root, s.q) : Integer(-(floor_div(s.p + root, -s.q) + 1));
        qs.push_back(a);
        Integer p = a * s.q - s.p;
        s.q = (s.d - p * p) / s.q;
        s.p = std::move(p);
    }
    std::size_t start_of_period = seen.at({s.p, s.q});
    return {std::vector<Nat>(qs.begin(), qs.begin() + static_cast<std::ptrdiff_t>(start_of_period)),
            std::vector<Nat>(qs.begin() + static_cast<std::ptrdiff_t>(start_of_period), qs.end())};
}

PeriodicCf periodic_cf(const QuadIrr& x) {
    Integer disc = x.discriminant();
    if (x.root_sign() == RootSign::Plus) return periodic_cf(SurdState{x.b1(), 2 * x.a2(), disc});
    return periodic_cf(SurdState{-x.b1(), -2 * x.a2(), disc});
}

PeriodicDesign design_of_cf(const PeriodicCf& cf) {
    if (cf.period.empty()) throw Error(Errc::InvalidPeriod, "continued fraction has no period");
    char bit = '1';
    std::string pre = append_bits({}, cf.preperiod, bit);
    std::string per = append_bits({}, cf.period, bit);
    if (cf.period.size() % 2 == 1) per = append_bits(std::move(per), cf.period, bit);
    return PeriodicDesign::make(std::move(pre), std::move(per));
}

PeriodicDesign periodic_design_of_sqrt(const ExtRational& q) {
    if (q.is_zero() || q.is_infinite()) throw Error(Errc::NonPositive, "need a positive finite rational");
    Integer d = q.num() * q.den();
    if (is_perfect_square(d)) throw Error(Errc::PerfectSquare, "sqrt(" + q.to_string() + ") is rational");
    return design_of_cf(periodic_cf(SurdState{0, q.den(), d}));
}

int classify_type(const FiniteDesign& period) {
    require_period(period);
    RunLengths ks = runs(period);
    bool head = ks.front() >= 1;
    bool tail = ks.back() >= 1;
    if (head) return tail ? 2 : 1;
    return tail ? 4 : 3;
}

FiniteDesign conjugate_root_design(const FiniteDesign& period) {
    require_period(period);
    return inverse_design(period);
}

Purity purity_test(const ThetaValue& t) {
    if (t.is_dyadic()) return Purity::Rational;
    return boost::multiprecision::bit_test(t.den(), 0) ? Purity::PureQuadratic : Purity::NonPureQuadratic;
}

}  // namespace diatomic
