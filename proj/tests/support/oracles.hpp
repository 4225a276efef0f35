#pragma once

// Reference implementations used only by tests. They deliberately avoid the
// library's algorithms.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "diatomic/integer.hpp"

namespace oracle {

using diatomic::Integer;
using diatomic::Rational;

// a_0 .. a_{size-1} from the defining recurrence.
inline std::vector<std::uint64_t> stern_table(std::size_t size) {
    std::vector<std::uint64_t> a(std::max<std::size_t>(size, 2));
    a[0] = 0;
    a[1] = 1;
    for (std::size_t m = 2; m < a.size(); ++m) a[m] = m % 2 == 0 ? a[m / 2] : a[m / 2] + a[m / 2 + 1];
    a.resize(size);
    return a;
}

inline std::uint64_t euler_phi(std::uint64_t a) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= a; ++k)
        if (std::gcd(k, a) == 1) ++count;
    return count;
}

inline std::string binary_word(std::uint64_t m, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if ((m >> (n - 1 - i)) & 1u) s[i] = '1';
    return s;
}

// Determinant of the tridiagonal matrix with diagonal xs, 1 above and -1
// below, by Gaussian elimination over the rationals (empty -> 1).
inline Integer tridiagonal_det(const std::vector<Integer>& xs) {
    const std::size_t l = xs.size();
    std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l, 0));
    for (std::size_t i = 0; i < l; ++i) {
        m[i][i] = Rational(xs[i]);
        if (i + 1 < l) {
            m[i][i + 1] = 1;
            m[i + 1][i] = -1;
        }
    }
    Rational det = 1;
    for (std::size_t col = 0; col < l; ++col) {
        std::size_t pivot = col;
        while (pivot < l && m[pivot][col] == 0) ++pivot;
        if (pivot == l) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < l; ++r) {
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < l; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return boost::multiprecision::numerator(det);
}

// Inverse question-mark function at m/2^n by descending the Stern-Brocot
// tree: each binary digit picks the left or right half of the current
// mediant interval.
inline Rational question_mark_inverse(std::uint64_t m, std::size_t n) {
    if (m == 0) return 0;
    if (m == (std::uint64_t{1} << n)) return 1;
    while (m % 2 == 0) {
        m /= 2;
        --n;
    }
    Integer lp = 0, lq = 1, hp = 1, hq = 1;
    for (std::size_t i = 1; i < n; ++i) {
        Integer mp = lp + hp, mq = lq + hq;
        if ((m >> (n - i)) & 1u) {
            lp = mp;
            lq = mq;
        } else {
            hp = mp;
            hq = mq;
        }
    }
    return Rational(lp + hp, lq + hq);
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed5eedULL + salt); }

inline std::string random_word(std::mt19937_64& gen, std::size_t len) {
    std::string s(len, '0');
    for (char& c : s) c = (gen() & 1u) ? '1' : '0';
    return s;
}

}  // namespace oracle
