#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "diatomic/assembly.hpp"
#include "diatomic/continuant.hpp"
#include "diatomic/error.hpp"
#include "diatomic/matrix.hpp"
#include "diatomic/sdi.hpp"
#include "support/oracles.hpp"

using namespace diatomic;

namespace {

FiniteDesign fd(const char* text) { return std::get<FiniteDesign>(parse_design(text)); }

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::OutOfRange;
}

QuadSurd mobius(const UniModMatrix& m, const QuadSurd& x) {
    return (QuadSurd(Rational(m.a())) * x + QuadSurd(Rational(m.b()))) /
           (QuadSurd(Rational(m.c())) * x + QuadSurd(Rational(m.d())));
}

}  // namespace

TEST_CASE("assembly at dyadics") {
    CHECK(assembly_dyadic(1, 1) == ExtRational(1));
    CHECK(assembly_dyadic(5, 3) == ExtRational(3, 2));
    CHECK(assembly_dyadic(25, 5) == ExtRational(7, 3));
    CHECK(assembly_dyadic(0, 4) == ExtRational(0));
    for (std::size_t n = 0; n <= 10; ++n) CHECK(assembly_dyadic(pow2(n), n).is_infinite());
    CHECK(code_of([] { assembly_dyadic(9, 3); }) == Errc::OutOfRange);
    CHECK(code_of([] { assembly_dyadic(ThetaValue(1, 3)); }) == Errc::OutOfRange);
    // independent of the representative
    for (std::size_t n = 0; n <= 8; ++n)
        for (Nat m = 0; m <= pow2(n); ++m) CHECK(assembly_dyadic(2 * m, n + 1) == assembly_dyadic(m, n));
}

TEST_CASE("strict monotonicity with exact gaps") {
    for (std::size_t n = 0; n <= 10; ++n) {
        Nat top = pow2(n);
        for (Nat m = 0; m + 1 < top; ++m) {
            ExtRational gap = difference(assembly_dyadic(m + 1, n), assembly_dyadic(m, n));
            REQUIRE(gap == ExtRational(1, sdi({n, top - m}) * sdi({n, top - m - 1})));
        }
    }
}

TEST_CASE("inverse assembly") {
    CHECK(assembly_inverse(ExtRational(7, 3)) == fd("11001"));
    CHECK(theta_of(assembly_inverse(ExtRational(7, 3))) == ThetaValue(25, 32));
    CHECK(assembly_inverse(ExtRational(1)) == fd("1"));
    CHECK(assembly_inverse(ExtRational(0)) == fd(""));
    CHECK(assembly_inverse(ExtRational::infinity()) == fd("1t"));
    for (int a = 0; a <= 40; ++a)
        for (int b = 1; b <= 40; ++b) {
            if (std::gcd(a, b) != 1) continue;
            DesignNumber dn = design_number(assembly_inverse(ExtRational(a, b)));
            CHECK(assembly_dyadic(dn.m, dn.n) == ExtRational(a, b));
        }
}

TEST_CASE("assembly of runs is their continued fraction") {
    for (std::size_t n = 1; n <= 10; ++n)
        for (std::uint64_t m = 1; m < (1u << n); m += 2)
            REQUIRE(assembly_dyadic(m, n) == cf_eval(runs(FiniteDesign::word(oracle::binary_word(m, n))).values()));
}

TEST_CASE("reflection") {
    CHECK(reflection(ThetaValue(1, 2)) == std::make_pair(ExtRational(1), ExtRational(1)));
    CHECK(reflection(ThetaValue(0, 1)) == std::make_pair(ExtRational::infinity(), ExtRational::infinity()));
    CHECK(reflection(ThetaValue(5, 8)) == std::make_pair(ExtRational(2, 3), ExtRational(2, 3)));
    for (std::size_t n = 0; n <= 10; ++n)
        for (Nat m = 0; m <= pow2(n); ++m) {
            auto [lhs, rhs] = reflection(ThetaValue::dyadic(m, n));
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("composition action") {
    CHECK(compose_action(fd(""), ExtRational(5, 9)) == ExtRational(5, 9));
    CHECK(compose_action(fd("1"), assembly_dyadic(1, 1)) == ExtRational(2));
    CHECK(assembly_dyadic(3, 2) == ExtRational(2));
    auto gen = oracle::rng(30);
    for (int trial = 0; trial < 200; ++trial) {
        FiniteDesign d = FiniteDesign::word(oracle::random_word(gen, gen() % 10));
        FiniteDesign d2 = FiniteDesign::word(oracle::random_word(gen, gen() % 10));
        if (trial % 7 == 0) d2 = FiniteDesign::terminal(gen() % 3);
        DesignNumber both = design_number(compose(d, d2));
        DesignNumber tail = design_number(d2);
        CHECK(assembly_dyadic(both.m, both.n) == compose_action(d, assembly_dyadic(tail.m, tail.n)));
    }
    // golden ratio is the fixed point of U("10")
    QuadSurd phi(Rational(1, 2), Rational(1, 2), 5);
    CHECK(mobius(sdm(fd("10")), phi) == phi);
}

TEST_CASE("composition action on periodic tails") {
    auto gen = oracle::rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::string per = oracle::random_word(gen, 2 + gen() % 5);
        if (per.find('0') == std::string::npos || per.find('1') == std::string::npos) continue;
        PeriodicDesign p = PeriodicDesign::make(oracle::random_word(gen, gen() % 4), per);
        FiniteDesign d = FiniteDesign::word(oracle::random_word(gen, gen() % 6));
        QuadSurd tail = assembly_exact(theta_of(p));
        QuadSurd whole = assembly_exact(theta_of(compose(d, p)));
        CHECK(whole == mobius(sdm(d), tail));
    }
}

TEST_CASE("enclosures") {
    Enclosure e = assembly_enclose("10", 2);
    CHECK(e.lo == ExtRational(1));
    CHECK(e.hi == ExtRational(2));
    e = assembly_enclose("10101010", 4);
    CHECK(e.lo == ExtRational(3, 2));
    CHECK(e.hi == ExtRational(5, 3));
    CHECK(e.bits_used == 4);
    e = assembly_enclose("0110", 0);
    CHECK(e.lo == ExtRational(0));
    CHECK(e.hi.is_infinite());
    CHECK(e.width().is_infinite());
    CHECK(code_of([] { assembly_enclose("10", 3); }) == Errc::InsufficientBits);

    for (std::size_t n = 1; n <= 10; ++n)
        for (std::uint64_t m = 0; m + 1 < (1u << n); ++m) {
            Enclosure f = assembly_enclose(oracle::binary_word(m, n), n);
            Nat top = pow2(n);
            REQUIRE(f.width() == ExtRational(1, sdi({n, top - m}) * sdi({n, top - m - 1})));
        }
}

TEST_CASE("enclosures shrink around periodic values") {
    for (const char* text : {"(10)", "(1001)", "(101)", "0(01)", "1(10)", "(010)", "11(0111)", "(11000011)"}) {
        PeriodicDesign p = std::get<PeriodicDesign>(parse_design(text));
        QuadIrr q = quad_of_periodic(p);
        std::string bits = p.prefix(64);
        ExtRational previous = ExtRational::infinity();
        for (std::size_t n = 0; n <= 64; ++n) {
            Enclosure e = assembly_enclose(bits, n);
            CHECK(e.contains(q.value()));
            if (!e.hi.is_infinite()) {
                CHECK(q.sign_at(e.lo.to_rational()) != q.sign_at(e.hi.to_rational()));
            }
            CHECK(e.width() <= previous);
            previous = e.width();
        }
        CHECK(previous < ExtRational(1, 1000000));
    }
}

TEST_CASE("assembly at rational points") {
    auto sqrt2 = std::get<QuadIrr>(assembly_of_rational_theta(ThetaValue(3, 5)));
    CHECK(sqrt2.equation_string() == "x^2 - 2 = 0");
    CHECK(sqrt2.value() == QuadSurd(0, 1, 2));
    auto sqrt3 = std::get<QuadIrr>(assembly_of_rational_theta(ThetaValue(5, 7)));
    CHECK(sqrt3.value() == QuadSurd(0, 1, 3));
    auto golden = std::get<QuadIrr>(assembly_of_rational_theta(ThetaValue(2, 3)));
    CHECK(golden.equation_string() == "x^2 - x - 1 = 0");
    CHECK(std::get<ExtRational>(assembly_of_rational_theta(ThetaValue(25, 32))) == ExtRational(7, 3));
    CHECK(assembly_exact(ThetaValue(1, 3)) == QuadSurd(Rational(-1, 2), Rational(1, 2), 5));
    CHECK(code_of([] { assembly_exact(ThetaValue(1, 1)); }) == Errc::OutOfRange);
}

TEST_CASE("question mark inverse") {
    CHECK(question_mark_inverse(ThetaValue(1, 2)) == ExtRational(1, 2));
    CHECK(question_mark_inverse(ThetaValue(0, 1)) == ExtRational(0));
    CHECK(question_mark_inverse(ThetaValue(3, 4)) == ExtRational(2, 3));
    CHECK(question_mark_inverse(ThetaValue(1, 1)) == ExtRational(1));
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::uint64_t m = 0; m <= (1u << n); ++m)
            REQUIRE(question_mark_inverse(ThetaValue::dyadic(m, n)).to_rational() == oracle::question_mark_inverse(m, n));
}

TEST_CASE("sampling") {
    auto rows = assembly_sample(3);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].second == ExtRational(0));
    CHECK(rows[4].first == ThetaValue(1, 2));
    CHECK(rows[4].second == ExtRational(1));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].second < rows[i].second);
}
