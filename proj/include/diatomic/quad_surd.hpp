#pragma once

#include <string>

#include "diatomic/integer.hpp"

namespace diatomic {

// Exact element r + s*sqrt(d) of Q(sqrt(d)); d is a positive non-square when
// s != 0. Values with s == 0 are plain rationals and mix with any field.
// Radicands differing by a square factor are reconciled on the fly.
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(Rational r);  // NOLINT: rationals embed
    QuadSurd(Rational r, Rational s, Integer d);

    const Rational& rational_part() const { return r_; }
    const Rational& surd_part() const { return s_; }
    const Integer& radicand() const { return d_; }
    bool is_rational() const { return s_ == 0; }

    int sign() const;
    QuadSurd conjugate() const;

    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x);
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);

    friend bool operator==(const QuadSurd& x, const QuadSurd& y);
    friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadSurd& x, const QuadSurd& y) { return y < x; }
    friend bool operator<=(const QuadSurd& x, const QuadSurd& y) { return !(y < x); }
    friend bool operator>=(const QuadSurd& x, const QuadSurd& y) { return !(x < y); }

    // "r", or "r + s*sqrt(d)" with rationals printed as a/b.
    std::string to_string() const;
    // Rough value for diagnostics only.
    double approx() const;

private:
    // Same value over radicand d; d * d_ must be a square.
    QuadSurd rebased(const Integer& d) const;
    static Integer common_radicand(const QuadSurd& x, const QuadSurd& y);

    Rational r_ = 0;
    Rational s_ = 0;
    Integer d_ = 0;
};

}  // namespace diatomic
