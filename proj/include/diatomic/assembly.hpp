#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "diatomic/design.hpp"
#include "diatomic/ext_rational.hpp"
#include "diatomic/quad_surd.hpp"
#include "diatomic/quadratic.hpp"

namespace diatomic {

// A(m / 2^n) = [2^n:m] / [2^n:2^n-m]; A(1) = inf.
ExtRational assembly_dyadic(const Nat& m, std::size_t n);
ExtRational assembly_dyadic(const ThetaValue& t);

FiniteDesign assembly_inverse(const ExtRational& v);

struct Enclosure {
    ExtRational lo;
    ExtRational hi;
    std::size_t bits_used = 0;

    // hi - lo; infinite when hi is.
    ExtRational width() const;
    bool contains(const QuadSurd& x) const;
};

Enclosure assembly_enclose(std::string_view bits, std::size_t n);

std::variant<ExtRational, QuadIrr> assembly_of_rational_theta(const ThetaValue& t);

// A(t) for rational t in [0, 1) as a field element.
QuadSurd assembly_exact(const ThetaValue& t);

// (A(1 - t), 1 / A(t)) for dyadic t.
std::pair<ExtRational, ExtRational> reflection(const ThetaValue& t);

ExtRational compose_action(const FiniteDesign& d, const ExtRational& v);

ExtRational question_mark_inverse(const ThetaValue& t);

// (k/2^grid, A(k/2^grid)) for k = 0 .. 2^grid - 1.
std::vector<std::pair<ThetaValue, ExtRational>> assembly_sample(std::size_t grid);

}  // namespace diatomic
