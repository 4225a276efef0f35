#pragma once

#include <string>
#include <vector>

#include "diatomic/design.hpp"
#include "diatomic/ext_rational.hpp"
#include "diatomic/integer.hpp"
#include "diatomic/quad_surd.hpp"

namespace diatomic {

enum class RootSign { Plus, Minus };

// Root (b1 +- sqrt(disc)) / (2 a2) of a2 X^2 - b1 X - c0 = 0, with
// disc = b1^2 + 4 a2 c0 positive and not a square. Coefficients are kept
// primitive with a2 > 0.
class QuadIrr {
public:
    QuadIrr(Integer a2, Integer b1, Integer c0, RootSign sign = RootSign::Plus);

    const Integer& a2() const { return a2_; }
    const Integer& b1() const { return b1_; }
    const Integer& c0() const { return c0_; }
    RootSign root_sign() const { return sign_; }

    Integer discriminant() const { return b1_ * b1_ + 4 * a2_ * c0_; }
    QuadSurd value() const;
    // The other root of the same equation.
    QuadSurd conjugate_value() const;

    // Sign of a2 x^2 - b1 x - c0.
    int sign_at(const Rational& x) const;

    // "x^2 - x - 1 = 0" style, A x^2 + B x + C with B = -b1, C = -c0.
    std::string equation_string() const;

    friend bool operator==(const QuadIrr&, const QuadIrr&) = default;

private:
    Integer a2_, b1_, c0_;
    RootSign sign_;
};

QuadIrr quad_from_period(const FiniteDesign& period);
QuadIrr quad_of_periodic(const PeriodicDesign& pd);

// Continued fraction state (p + sqrt(d)) / q with q | d - p^2.
struct SurdState {
    Integer p;
    Integer q;
    Integer d;

    friend bool operator==(const SurdState&, const SurdState&) = default;
};

struct PeriodicCf {
    std::vector<Nat> preperiod;
    std::vector<Nat> period;
};

// Eventually periodic continued fraction of a positive quadratic irrational.
PeriodicCf periodic_cf(const QuadIrr& x);
PeriodicCf periodic_cf(const SurdState& start);

// Design whose assembly value has the given continued fraction.
PeriodicDesign design_of_cf(const PeriodicCf& cf);

PeriodicDesign periodic_design_of_sqrt(const ExtRational& q);

int classify_type(const FiniteDesign& period);
FiniteDesign conjugate_root_design(const FiniteDesign& period);

enum class Purity { PureQuadratic, NonPureQuadratic, Rational };
Purity purity_test(const ThetaValue& t);

}  // namespace diatomic
