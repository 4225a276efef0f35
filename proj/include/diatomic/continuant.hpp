#pragma once

#include <span>
#include <vector>

#include "diatomic/design.hpp"
#include "diatomic/ext_rational.hpp"
#include "diatomic/integer.hpp"

namespace diatomic {

// Continuant [k0, ..., k(l-1)] with [] = 1.
Nat continuant(std::span<const Nat> ks);

// CF(k0, ..., k(l-1)) with 1/0 = inf and 1/inf = 0. Zeros are allowed only in
// the first and last position; otherwise MalformedRuns.
ExtRational cf_eval(std::span<const Nat> ks);

Nat sdi_from_runs(const RunLengths& ks);

// ([k0..k(l-1)], [k1..k(l-1)], [k0..k(l-2)], [k1..k(l-2)]), which is
// ([m], [2^n-m], [m+1], [2^n-(m+1)]). A single run (n) gives (n, 1, 1, 0).
struct CornerContinuants {
    Nat full;
    Nat tail;
    Nat head;
    Nat middle;

    friend bool operator==(const CornerContinuants&, const CornerContinuants&) = default;
};

CornerContinuants sdi_corner_continuants(const RunLengths& ks);

// CF tails whose product is continuant(ks). The product is checked before
// returning.
std::vector<ExtRational> cf_product_decomposition(std::span<const Nat> ks);

}  // namespace diatomic
