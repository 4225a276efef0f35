#include "diatomic/design.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "diatomic/continuant.hpp"
#include "diatomic/error.hpp"

namespace diatomic {

namespace {

void check_bits(std::string_view bits) {
    for (char c : bits)
        if (c != '0' && c != '1') throw Error(Errc::SyntaxError, std::string("unexpected character '") + c + "'");
}

Nat word_value(std::string_view bits) {
    Nat m = 0;
    for (char c : bits) {
        m <<= 1;
        if (c == '1') m += 1;
    }
    return m;
}

std::string flip(std::string bits) {
    for (char& c : bits) c = c == '0' ? '1' : '0';
    return bits;
}

std::size_t to_size(const Nat& k) {
    if (k > Nat(std::numeric_limits<std::size_t>::max() / 2)) throw Error(Errc::OutOfRange, "run too long");
    return k.convert_to<std::size_t>();
}

void require_finite_word(const FiniteDesign& d, const char* what) {
    if (d.is_terminal()) throw Error(Errc::TerminalDesign, std::string(what) + " of terminal design " + d.to_string());
}

void require_pair(const Nat& a, const Nat& b) {
    if (a <= 0 || b <= 0) throw Error(Errc::ZeroInput, "need positive integers, got " + a.str() + ", " + b.str());
    if (gcd(a, b) != 1) throw Error(Errc::NotCoprime, a.str() + " and " + b.str() + " share a factor");
}

}  // namespace

FiniteDesign FiniteDesign::word(std::string bits) {
    check_bits(bits);
    FiniteDesign d;
    d.bits_ = std::move(bits);
    return d;
}

FiniteDesign FiniteDesign::terminal(std::size_t n) {
    FiniteDesign d;
    d.bits_.assign(n, '0');
    d.terminal_ = true;
    return d;
}

FiniteDesign FiniteDesign::from_number(const Nat& m, std::size_t n) {
    if (m < 0) throw Error(Errc::OutOfRange, "negative design number");
    Nat top = pow2(n);
    if (m > top) throw Error(Errc::OutOfTable, m.str() + " exceeds 2^" + std::to_string(n));
    if (m == top) return terminal(n);
    std::string bits(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if (boost::multiprecision::bit_test(m, static_cast<unsigned>(n - 1 - i))) bits[i] = '1';
    return word(std::move(bits));
}

std::string FiniteDesign::to_string() const { return terminal_ ? "1" + bits_ + "t" : bits_; }

PeriodicDesign PeriodicDesign::make(std::string pre, std::string per) {
    check_bits(pre);
    check_bits(per);
    if (per.empty()) throw Error(Errc::InvalidPeriod, "empty period");
    if (per.find('0') == std::string::npos || per.find('1') == std::string::npos)
        throw Error(Errc::InvalidPeriod, "period (" + per + ") is constant");

    const std::size_t n = per.size();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        bool repeats = true;
        for (std::size_t i = len; i < n && repeats; ++i) repeats = per[i] == per[i - len];
        if (repeats) {
            per.resize(len);
            break;
        }
    }
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    }
    return PeriodicDesign(std::move(pre), std::move(per));
}

std::string PeriodicDesign::prefix(std::size_t n) const {
    std::string out = pre_.substr(0, n);
    while (out.size() < n) out.push_back(per_[(out.size() - pre_.size()) % per_.size()]);
    return out;
}

std::string PeriodicDesign::to_string() const { return pre_ + "(" + per_ + ")"; }

Design parse_design(std::string_view text) {
    auto open = text.find('(');
    if (open != std::string_view::npos) {
        if (text.back() != ')' || text.find('(', open + 1) != std::string_view::npos)
            throw Error(Errc::SyntaxError, "malformed period group in '" + std::string(text) + "'");
        std::string_view pre = text.substr(0, open);
        std::string_view per = text.substr(open + 1, text.size() - open - 2);
        if (per.empty()) throw Error(Errc::SyntaxError, "empty period group");
        if (pre.find('t') != std::string_view::npos || per.find('t') != std::string_view::npos)
            throw Error(Errc::SyntaxError, "terminal marker inside a periodic design");
        check_bits(pre);
        check_bits(per);
        return PeriodicDesign::make(std::string(pre), std::string(per));
    }
    if (!text.empty() && text.back() == 't') {
        std::string_view body = text.substr(0, text.size() - 1);
        if (body.empty() || body.front() != '1' || body.find_first_not_of('0', 1) != std::string_view::npos)
            throw Error(Errc::SyntaxError, "terminal designs are written 1 0...0 t, got '" + std::string(text) + "'");
        return FiniteDesign::terminal(body.size() - 1);
    }
    return FiniteDesign::word(std::string(text));
}

std::string to_string(const Design& d) {
    return std::visit([](const auto& v) { return v.to_string(); }, d);
}

RunLengths::RunLengths(std::vector<Nat> ks) : ks_(std::move(ks)) {
    if (ks_.empty() || ks_.size() % 2 == 0)
        throw Error(Errc::MalformedRuns, "run list must have odd length, got " + std::to_string(ks_.size()));
    for (std::size_t i = 0; i < ks_.size(); ++i) {
        bool interior = i > 0 && i + 1 < ks_.size();
        if (ks_[i] < 0 || (interior && ks_[i] == 0))
            throw Error(Errc::MalformedRuns, "bad run length at position " + std::to_string(i));
    }
}

RunLengths RunLengths::reversed() const { return RunLengths(std::vector<Nat>(ks_.rbegin(), ks_.rend())); }

RunLengths runs(const FiniteDesign& d) {
    require_finite_word(d, "runs");
    std::vector<Nat> ks;
    char expect = '1';
    std::size_t count = 0;
    for (char c : d.bits()) {
        if (c != expect) {
            ks.emplace_back(count);
            count = 0;
            expect = c;
        }
        ++count;
    }
    ks.emplace_back(count);
    if (ks.size() % 2 == 0) ks.emplace_back(0);
    return RunLengths(std::move(ks));
}

FiniteDesign from_runs(const RunLengths& ks) {
    std::string bits;
    for (std::size_t i = 0; i < ks.size(); ++i) bits.append(to_size(ks[i]), i % 2 == 0 ? '1' : '0');
    return FiniteDesign::word(std::move(bits));
}

DesignNumber design_number(const FiniteDesign& d) {
    if (d.is_terminal()) return {pow2(d.length()), d.length()};
    return {word_value(d.bits()), d.length()};
}

std::vector<Nat> partial_quotients(const Nat& a, const Nat& b) {
    require_pair(a, b);
    std::vector<Nat> qs;
    Nat x = a;
    Nat y = b;
    while (y != 0) {
        qs.push_back(x / y);
        Nat r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return qs;
}

std::pair<Nat, Nat> realizing_pair(const std::vector<Nat>& qs) {
    if (qs.empty()) throw Error(Errc::MalformedRuns, "no quotients");
    bool unit = qs.size() == 1 && qs[0] == 1;
    for (std::size_t i = 0; i < qs.size(); ++i)
        if (qs[i] < 0 || (i > 0 && qs[i] == 0)) throw Error(Errc::MalformedRuns, "bad quotient at " + std::to_string(i));
    if (!unit && qs.back() < 2) throw Error(Errc::MalformedRuns, "last quotient must be at least 2");
    std::span<const Nat> all(qs);
    return {continuant(all), continuant(all.subspan(1))};
}

FiniteDesign euclidean_design(const Nat& a, const Nat& b) {
    std::vector<Nat> qs = partial_quotients(a, b);
    if (a == 1 && b == 1) return FiniteDesign::word("1");
    if (qs.size() % 2 == 0) {
        qs.back() -= 1;
        qs.emplace_back(1);
    }
    return from_runs(RunLengths(std::move(qs)));
}

FiniteDesign conjugate(const FiniteDesign& d) {
    if (d.is_terminal()) return FiniteDesign::word(std::string(d.length(), '0'));
    DesignNumber dn = design_number(d);
    return FiniteDesign::from_number(pow2(dn.n) - dn.m, dn.n);
}

PeriodicDesign conjugate(const PeriodicDesign& d) { return PeriodicDesign::make(flip(d.preperiod()), flip(d.period())); }

Design conjugate(const Design& d) {
    return std::visit([](const auto& v) -> Design { return conjugate(v); }, d);
}

FiniteDesign complement(const FiniteDesign& d) {
    require_finite_word(d, "complement");
    return FiniteDesign::word(flip(d.bits()));
}

FiniteDesign inverse_design(const FiniteDesign& d) { return from_runs(runs(d).reversed()); }

FiniteDesign compose(const FiniteDesign& d, const FiniteDesign& d2) {
    require_finite_word(d, "composition");
    if (!d2.is_terminal()) return FiniteDesign::word(d.bits() + d2.bits());
    if (d.bits().find('0') == std::string::npos) return FiniteDesign::terminal(d.length() + d2.length());
    std::string bits = FiniteDesign::from_number(design_number(d).m + 1, d.length()).bits();
    bits.append(d2.length(), '0');
    return FiniteDesign::word(std::move(bits));
}

PeriodicDesign compose(const FiniteDesign& d, const PeriodicDesign& d2) {
    require_finite_word(d, "composition");
    return PeriodicDesign::make(d.bits() + d2.preperiod(), d2.period());
}

Design compose(const FiniteDesign& d, const Design& d2) {
    return std::visit([&](const auto& v) -> Design { return compose(d, v); }, d2);
}

FiniteDesign reduce(const FiniteDesign& d) {
    if (d.is_terminal()) return FiniteDesign::terminal(0);
    std::string bits = d.bits();
    while (!bits.empty() && bits.back() == '0') bits.pop_back();
    return FiniteDesign::word(std::move(bits));
}

bool is_reduced(const FiniteDesign& d) {
    if (d.is_terminal()) return d.length() == 0;
    return d.empty() || d.bits().back() == '1';
}

bool is_primitive(const FiniteDesign& d) {
    return !d.is_terminal() && !d.empty() && d.bits().front() == '1' && d.bits().back() == '1';
}

ThetaValue theta_of(const FiniteDesign& d) {
    DesignNumber dn = design_number(d);
    return ThetaValue::dyadic(dn.m, dn.n);
}

ThetaValue theta_of(const PeriodicDesign& d) {
    std::size_t k = d.preperiod().size();
    std::size_t n = d.period().size();
    Nat cycle = pow2(n) - 1;
    return ThetaValue(cycle * word_value(d.preperiod()) + word_value(d.period()), pow2(k) * cycle);
}

ThetaValue theta_of(const Design& d) {
    return std::visit([](const auto& v) { return theta_of(v); }, d);
}

Design design_of_theta(const ThetaValue& t) {
    if (auto k = t.dyadic_exponent()) {
        if (t.num() == t.den()) return FiniteDesign::terminal(0);
        return reduce(FiniteDesign::from_number(t.num(), *k));
    }
    std::map<Nat, std::size_t> seen;
    std::string bits;
    Nat r = t.num();
    while (seen.find(r) == seen.end()) {
        seen.emplace(r, bits.size());
        r <<= 1;
        if (r >= t.den()) {
            bits.push_back('1');
            r -= t.den();
        } else {
            bits.push_back('0');
        }
    }
    std::size_t start = seen[r];
    return PeriodicDesign::make(bits.substr(0, start), bits.substr(start));
}

}  // namespace diatomic
