#pragma once

#include <string>

#include "diatomic/design.hpp"
#include "diatomic/ext_rational.hpp"
#include "diatomic/integer.hpp"

namespace diatomic {

// Row-major (a b; c d) with nonnegative entries and determinant 1.
class UniModMatrix {
public:
    UniModMatrix() : a_(1), b_(0), c_(0), d_(1) {}
    // Throws NegativeEntry, then NotUnimodular.
    UniModMatrix(Integer a, Integer b, Integer c, Integer d);

    static UniModMatrix identity() { return {}; }
    // U("1") and U("0").
    static UniModMatrix right() { return {1, 1, 0, 1}; }
    static UniModMatrix left() { return {1, 0, 1, 1}; }

    const Nat& a() const { return a_; }
    const Nat& b() const { return b_; }
    const Nat& c() const { return c_; }
    const Nat& d() const { return d_; }
    Nat trace() const { return a_ + d_; }
    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    // "a,b;c,d"
    std::string to_string() const;

    friend UniModMatrix operator*(const UniModMatrix& x, const UniModMatrix& y);
    friend bool operator==(const UniModMatrix&, const UniModMatrix&) = default;

private:
    Nat a_, b_, c_, d_;
};

UniModMatrix sdm(const FiniteDesign& d);
FiniteDesign design_of_matrix(const UniModMatrix& m);
ExtRational apply_mobius(const UniModMatrix& m, const ExtRational& x);

struct MatrixSymmetries {
    UniModMatrix of_inverse;             // (d b; c a)
    UniModMatrix of_complement_inverse;  // (a c; b d)
    UniModMatrix of_complement;          // (d c; b a)
};

MatrixSymmetries matrix_symmetries(const FiniteDesign& d);

}  // namespace diatomic
