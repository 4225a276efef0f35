#pragma once

#include <compare>
#include <string>

#include "diatomic/integer.hpp"

namespace diatomic {

// Nonnegative rational extended by infinity, stored as 1/0. Always in lowest
// terms; 0/0 is never formed.
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(long long v);  // NOLINT: implicit from small integers
    ExtRational(Integer num, Integer den = 1);

    static ExtRational infinity();
    static ExtRational from_rational(const Rational& r);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0; }

    // Finite value; throws OutOfRange on infinity.
    Rational to_rational() const;
    ExtRational reciprocal() const;

    std::string to_string() const;

    friend bool operator==(const ExtRational&, const ExtRational&) = default;
    friend std::strong_ordering operator<=>(const ExtRational& x, const ExtRational& y);

    // 0 * inf and inf - inf are Indeterminate.
    friend ExtRational operator+(const ExtRational& x, const ExtRational& y);
    friend ExtRational operator*(const ExtRational& x, const ExtRational& y);
    friend ExtRational operator/(const ExtRational& x, const ExtRational& y);

private:
    Integer num_ = 0;
    Integer den_ = 1;
};

// x - y for finite x >= y.
ExtRational difference(const ExtRational& x, const ExtRational& y);

}  // namespace diatomic
