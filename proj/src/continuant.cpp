#include "diatomic/continuant.hpp"

#include <stdexcept>

#include "diatomic/error.hpp"

namespace diatomic {

namespace {

void check_cf_word(std::span<const Nat> ks) {
    if (ks.empty()) throw Error(Errc::MalformedRuns, "empty continued fraction");
    for (std::size_t i = 0; i < ks.size(); ++i) {
        bool interior = i > 0 && i + 1 < ks.size();
        if (ks[i] < 0 || (interior && ks[i] == 0))
            throw Error(Errc::MalformedRuns, "bad partial quotient at position " + std::to_string(i));
    }
}

}  // namespace

Nat continuant(std::span<const Nat> ks) {
    Nat prev = 0;
    Nat cur = 1;
    for (const Nat& k : ks) {
        Nat next = k * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ExtRational cf_eval(std::span<const Nat> ks) {
    check_cf_word(ks);
    ExtRational v(ks.back());
    for (std::size_t i = ks.size() - 1; i-- > 0;) v = ExtRational(ks[i]) + v.reciprocal();
    return v;
}

Nat sdi_from_runs(const RunLengths& ks) { return continuant(ks.values()); }

CornerContinuants sdi_corner_continuants(const RunLengths& ks) {
    if (ks.size() == 1) return {ks[0], 1, 1, 0};
    std::span<const Nat> all(ks.values());
    const std::size_t l = all.size();
    return {continuant(all), continuant(all.subspan(1)), continuant(all.first(l - 1)),
            continuant(all.subspan(1, l - 2))};
}

std::vector<ExtRational> cf_product_decomposition(std::span<const Nat> ks) {
    check_cf_word(ks);
    std::span<const Nat> body = ks;
    if (ks.back() == 0) {
        if (ks.size() < 3) throw Error(Errc::MalformedRuns, "trailing zero needs at least three entries");
        body = ks.first(ks.size() - 2);
    }
    std::vector<ExtRational> tails;
    ExtRational product = 1;
    for (std::size_t j = 0; j < body.size(); ++j) {
        tails.push_back(cf_eval(body.subspan(j)));
        product = product * tails.back();
    }
    if (product != ExtRational(continuant(ks))) throw std::logic_error("continued fraction product mismatch");
    return tails;
}

}  // namespace diatomic
