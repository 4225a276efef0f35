#include "diatomic/assembly.hpp"

#include "diatomic/error.hpp"
#include "diatomic/matrix.hpp"
#include "diatomic/sdi.hpp"

namespace diatomic {

namespace {

std::size_t require_dyadic(const ThetaValue& t) {
    auto k = t.dyadic_exponent();
    if (!k) throw Error(Errc::OutOfRange, t.to_string() + " is not dyadic");
    return *k;
}

bool at_most(const ExtRational& x, const QuadSurd& y) {
    return x.is_infinite() ? false : QuadSurd(x.to_rational()) <= y;
}

}  // namespace

ExtRational assembly_dyadic(const Nat& m, std::size_t n) {
    Nat top = pow2(n);
    if (m < 0 || m > top) throw Error(Errc::OutOfRange, m.str() + "/2^" + std::to_string(n) + " is not in [0, 1]");
    if (m == top) return ExtRational::infinity();
    return ExtRational(stern(m), stern(top - m));
}

ExtRational assembly_dyadic(const ThetaValue& t) { return assembly_dyadic(t.num(), require_dyadic(t)); }

FiniteDesign assembly_inverse(const ExtRational& v) {
    if (v.is_zero()) return FiniteDesign();
    if (v.is_infinite()) return FiniteDesign::terminal(0);
    return euclidean_design(v.num(), v.den());
}

ExtRational Enclosure::width() const {
    if (hi.is_infinite()) return ExtRational::infinity();
    return difference(hi, lo);
}

bool Enclosure::contains(const QuadSurd& x) const {
    return at_most(lo, x) && (hi.is_infinite() || x <= QuadSurd(hi.to_rational()));
}

Enclosure assembly_enclose(std::string_view bits, std::size_t n) {
    if (bits.size() < n)
        throw Error(Errc::InsufficientBits, "need " + std::to_string(n) + " bits, got " + std::to_string(bits.size()));
    DesignNumber dn = design_number(FiniteDesign::word(std::string(bits.substr(0, n))));
    return {assembly_dyadic(dn.m, n), assembly_dyadic(dn.m + 1, n), n};
}

std::variant<ExtRational, QuadIrr> assembly_of_rational_theta(const ThetaValue& t) {
    if (t.is_dyadic()) return assembly_dyadic(t);
    return quad_of_periodic(std::get<PeriodicDesign>(design_of_theta(t)));
}

QuadSurd assembly_exact(const ThetaValue& t) {
    if (t.num() == t.den()) throw Error(Errc::OutOfRange, "A(1) is infinite");
    auto v = assembly_of_rational_theta(t);
    if (auto* r = std::get_if<ExtRational>(&v)) return QuadSurd(r->to_rational());
    return std::get<QuadIrr>(v).value();
}

std::pair<ExtRational, ExtRational> reflection(const ThetaValue& t) {
    std::size_t k = require_dyadic(t);
    return {assembly_dyadic(pow2(k) - t.num(), k), assembly_dyadic(t.num(), k).reciprocal()};
}

ExtRational compose_action(const FiniteDesign& d, const ExtRational& v) { return apply_mobius(sdm(d), v); }

ExtRational question_mark_inverse(const ThetaValue& t) {
    require_dyadic(t);
    ExtRational v = assembly_dyadic(t);
    if (v.is_infinite()) return 1;
    return ExtRational(v.num(), v.num() + v.den());
}

std::vector<std::pair<ThetaValue, ExtRational>> assembly_sample(std::size_t grid) {
    std::vector<std::pair<ThetaValue, ExtRational>> rows;
    Nat count = pow2(grid);
    for (Nat k = 0; k < count; ++k) rows.emplace_back(ThetaValue::dyadic(k, grid), assembly_dyadic(k, grid));
    return rows;
}

}  // namespace diatomic
