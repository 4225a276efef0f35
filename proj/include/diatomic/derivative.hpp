#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "diatomic/design.hpp"
#include "diatomic/ext_rational.hpp"
#include "diatomic/quad_surd.hpp"

namespace diatomic {

// b_m = [1, ..., 1] with m ones; m = 0 throws ZeroLength.
Nat fib_continuant(std::size_t m);

// phi^(m-2) < b_m, decided exactly.
bool golden_lower_bound_holds(std::size_t m);

enum class Side { Left, Right };

struct QuotientSample {
    std::size_t j = 0;
    std::optional<QuadSurd> quotient;  // (A(eta +- 2^-j) - A(eta)) / (+-2^-j); empty means +inf
};

struct QuotientScan {
    ThetaValue eta;
    Side side = Side::Right;
    std::vector<QuotientSample> samples;
};

// Probes landing on 1 give an infinite sample; probes outside [0, 1] are skipped.
QuotientScan quotient_scan(const ThetaValue& eta, Side side, std::size_t jmax);

// Single quotient at h = 2^-j; throws OutOfRange if eta +- h leaves [0, 1).
QuadSurd difference_quotient(const ThetaValue& eta, Side side, std::size_t j);

enum class DerivativeVerdict { DivergesToInfinity, ZeroIfDifferentiable };

DerivativeVerdict derivative_at_rational(const ThetaValue& eta);

// 2^n / ([2^n:2^n-(m+1)] v + [2^n:2^n-m])^2 for d = {m}_n.
ExtRational affine_derivative_factor(const FiniteDesign& d, const ExtRational& v);

}  // namespace diatomic
