#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "diatomic/integer.hpp"

namespace diatomic {

// a_m of Stern's diatomic sequence.
Nat stern(const Nat& m);

// Position in the diatomic table; order may run from 0 to 2^depth.
struct SdiAddress {
    std::size_t depth = 0;
    Nat order = 0;
};

// [2^n : m]. Throws OutOfTable when m > 2^n.
Nat sdi(const SdiAddress& addr);

// ([m+1], [m], [2^n-(m+1)], [2^n-m]) at depth n, for m <= 2^n - 1.
struct SdiQuadruple {
    Nat next;
    Nat here;
    Nat co_next;
    Nat co_here;

    friend bool operator==(const SdiQuadruple&, const SdiQuadruple&) = default;
};

SdiQuadruple sdi_quadruple(const SdiAddress& addr);

// Bounded LRU memo for sdi_quadruple, safe to share between threads.
class QuadrupleCache {
public:
    explicit QuadrupleCache(std::size_t capacity = 4096);

    SdiQuadruple get(const SdiAddress& addr);
    std::size_t size() const;
    std::size_t hits() const;

private:
    using Key = std::pair<std::size_t, Nat>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };
    using Entry = std::pair<Key, SdiQuadruple>;

    std::size_t capacity_;
    mutable std::mutex mu_;
    std::list<Entry> lru_;
    std::unordered_map<Key, std::list<Entry>::iterator, KeyHash> index_;
    std::size_t hits_ = 0;
};

}  // namespace diatomic
