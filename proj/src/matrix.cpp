#include "diatomic/matrix.hpp"

#include <stdexcept>

#include "diatomic/error.hpp"
#include "diatomic/sdi.hpp"

namespace diatomic {

UniModMatrix::UniModMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ < 0 || b_ < 0 || c_ < 0 || d_ < 0) throw Error(Errc::NegativeEntry, "negative entry in " + to_string());
    if (a_ * d_ - b_ * c_ != 1) throw Error(Errc::NotUnimodular, "determinant of " + to_string() + " is not 1");
}

std::string UniModMatrix::to_string() const {
    return a_.str() + "," + b_.str() + ";" + c_.str() + "," + d_.str();
}

UniModMatrix operator*(const UniModMatrix& x, const UniModMatrix& y) {
    return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
            x.c_ * y.b_ + x.d_ * y.d_};
}

UniModMatrix sdm(const FiniteDesign& d) {
    if (d.is_terminal()) throw Error(Errc::TerminalDesign, "no matrix for terminal design " + d.to_string());
    DesignNumber dn = design_number(d);
    SdiQuadruple q = sdi_quadruple({dn.n, dn.m});
    return {q.next, q.here, q.co_next, q.co_here};
}

FiniteDesign design_of_matrix(const UniModMatrix& m) {
    Nat a = m.a(), b = m.b(), c = m.c(), d = m.d();
    std::string bits;
    auto batch = [](const Nat& x, const Nat& y, const Nat& u, const Nat& v) {
        // largest k with x >= k*u and y >= k*v
        if (u == 0) return Nat(y / v);
        if (v == 0) return Nat(x / u);
        return Nat(std::min<Nat>(x / u, y / v));
    };
    while (!(a == 1 && b == 0 && c == 0 && d == 1)) {
        if (a >= c && b >= d) {
            Nat k = batch(a, b, c, d);
            a -= k * c;
            b -= k * d;
            bits.append(k.convert_to<std::size_t>(), '1');
        } else if (c >= a && d >= b) {
            Nat k = batch(c, d, a, b);
            c -= k * a;
            d -= k * b;
            bits.append(k.convert_to<std::size_t>(), '0');
        } else {
            throw std::logic_error("unimodular matrix admits no peel");
        }
    }
    return FiniteDesign::word(std::move(bits));
}

ExtRational apply_mobius(const UniModMatrix& m, const ExtRational& x) {
    if (x.is_infinite()) return ExtRational(m.a(), m.c());
    return ExtRational(m.a() * x.num() + m.b() * x.den(), m.c() * x.num() + m.d() * x.den());
}

MatrixSymmetries matrix_symmetries(const FiniteDesign& d) {
    FiniteDesign inv = inverse_design(d);
    return {sdm(inv), sdm(complement(inv)), sdm(complement(d))};
}

}  // namespace diatomic
