#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "diatomic/integer.hpp"

namespace diatomic {

// Rational number in [0, 1] in lowest terms.
class ThetaValue {
public:
    ThetaValue() = default;
    // Throws OutOfRange outside [0,1] or for a zero denominator.
    ThetaValue(Integer num, Integer den);

    static ThetaValue dyadic(const Nat& m, std::size_t n);
    static ThetaValue from_rational(const Rational& r);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }
    Rational value() const { return Rational(num_, den_); }

    // Exponent k with den = 2^k, if any.
    std::optional<std::size_t> dyadic_exponent() const;
    bool is_dyadic() const { return dyadic_exponent().has_value(); }

    std::string to_string() const;

    friend bool operator==(const ThetaValue&, const ThetaValue&) = default;
    friend bool operator<(const ThetaValue& x, const ThetaValue& y) { return x.value() < y.value(); }

private:
    Integer num_ = 0;
    Integer den_ = 1;
};

}  // namespace diatomic
