#include "diatomic/derivative.hpp"

#include "diatomic/assembly.hpp"
#include "diatomic/error.hpp"
#include "diatomic/sdi.hpp"

namespace diatomic {

namespace {

void require_interior(const ThetaValue& eta) {
    if (eta.num() == 0 || eta.num() == eta.den())
        throw Error(Errc::OutOfRange, eta.to_string() + " is not in (0, 1)");
}

}  // namespace

Nat fib_continuant(std::size_t m) {
    if (m == 0) throw Error(Errc::ZeroLength, "continuant of zero ones");
    Nat prev = 1;
    Nat cur = 1;
    for (std::size_t i = 1; i < m; ++i) {
        Nat next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool golden_lower_bound_holds(std::size_t m) {
    const QuadSurd phi(Rational(1, 2), Rational(1, 2), 5);
    QuadSurd power = m == 1 ? phi - QuadSurd(Rational(1)) : QuadSurd(Rational(1));
    for (std::size_t i = 2; i < m; ++i) power = power * phi;
    return power < QuadSurd(Rational(fib_continuant(m)));
}

QuadSurd difference_quotient(const ThetaValue& eta, Side side, std::size_t j) {
    Rational h(Integer(1), pow2(j));
    Rational moved = side == Side::Right ? eta.value() + h : eta.value() - h;
    if (moved < 0 || moved >= 1) throw Error(Errc::OutOfRange, "probe point leaves [0, 1)");
    QuadSurd delta = assembly_exact(ThetaValue::from_rational(moved)) - assembly_exact(eta);
    return delta / QuadSurd(side == Side::Right ? h : Rational(-h));
}

QuotientScan quotient_scan(const ThetaValue& eta, Side side, std::size_t jmax) {
    require_interior(eta);
    if (jmax == 0) throw Error(Errc::OutOfRange, "jmax must be positive");
    QuotientScan scan{eta, side, {}};
    for (std::size_t j = 1; j <= jmax; ++j) {
        Rational h(Integer(1), pow2(j));
        Rational moved = side == Side::Right ? eta.value() + h : eta.value() - h;
        if (moved < 0 || moved > 1) continue;
        if (moved == 1)
            scan.samples.push_back({j, std::nullopt});
        else
            scan.samples.push_back({j, difference_quotient(eta, side, j)});
    }
    return scan;
}

DerivativeVerdict derivative_at_rational(const ThetaValue& eta) {
    require_interior(eta);
    return eta.is_dyadic() ? DerivativeVerdict::DivergesToInfinity : DerivativeVerdict::ZeroIfDifferentiable;
}

ExtRational affine_derivative_factor(const FiniteDesign& d, const ExtRational& v) {
    if (d.is_terminal()) throw Error(Errc::TerminalDesign, "no factor for terminal design " + d.to_string());
    DesignNumber dn = design_number(d);
    SdiQuadruple q = sdi_quadruple({dn.n, dn.m});
    if (v.is_infinite()) {
        if (q.co_next != 0) return 0;
        return ExtRational(pow2(dn.n), q.co_here * q.co_here);
    }
    ExtRational denom = ExtRational(q.co_next) * v + ExtRational(q.co_here);
    return ExtRational(pow2(dn.n)) / (denom * denom);
}

}  // namespace diatomic
