#include "diatomic/text.hpp"

#include <string>

#include "diatomic/error.hpp"

namespace diatomic {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view text) {
    text = trim(text);
    bool negative = !text.empty() && text.front() == '-';
    if (negative) text.remove_prefix(1);
    Nat v = parse_nat(text);
    return negative ? Integer(-v) : v;
}

}  // namespace

Nat parse_nat(std::string_view text) {
    text = trim(text);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
        throw Error(Errc::SyntaxError, "expected a natural number, got '" + std::string(text) + "'");
    auto first = text.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    return Nat(std::string(text.substr(first)));
}

ExtRational parse_ext_rational(std::string_view text) {
    text = trim(text);
    if (text == "inf") return ExtRational::infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExtRational(parse_nat(text));
    return ExtRational(parse_nat(text.substr(0, slash)), parse_nat(text.substr(slash + 1)));
}

ThetaValue parse_theta(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return ThetaValue(parse_nat(text), 1);
    Nat den = parse_nat(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::OutOfRange, "zero denominator");
    return ThetaValue(parse_nat(text.substr(0, slash)), den);
}

UniModMatrix parse_matrix(std::string_view text) {
    text = trim(text);
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw Error(Errc::SyntaxError, "matrix must be written a,b;c,d");
    auto row = [](std::string_view r) {
        auto comma = r.find(',');
        if (comma == std::string_view::npos || r.find(',', comma + 1) != std::string_view::npos)
            throw Error(Errc::SyntaxError, "matrix row must be written x,y");
        return std::make_pair(parse_integer(r.substr(0, comma)), parse_integer(r.substr(comma + 1)));
    };
    auto [a, b] = row(text.substr(0, semi));
    auto [c, d] = row(text.substr(semi + 1));
    return UniModMatrix(a, b, c, d);
}

}  // namespace diatomic
