#include "diatomic/sdi.hpp"

#include <cstdint>

#include "diatomic/error.hpp"

namespace diatomic {

namespace {

// order < 2^depth
bool below_top(const Nat& order, std::size_t depth) {
    if (order <= 0) return order == 0;
    return boost::multiprecision::msb(order) < depth;
}

// order <= 2^depth
bool within_table(const Nat& order, std::size_t depth) {
    if (order <= 0) return order == 0;
    std::size_t top = boost::multiprecision::msb(order);
    if (top < depth) return true;
    return top == depth && boost::multiprecision::lsb(order) == depth;
}

}  // namespace

Nat stern(const Nat& m) {
    if (m < 0) throw Error(Errc::OutOfRange, "negative index " + m.str());
    Nat x = 0;
    Nat y = 1;
    if (m == 0) return x;
    for (std::size_t i = boost::multiprecision::msb(m) + 1; i-- > 0;) {
        if (boost::multiprecision::bit_test(m, static_cast<unsigned>(i)))
            x += y;
        else
            y += x;
    }
    return x;
}

Nat sdi(const SdiAddress& addr) {
    if (!within_table(addr.order, addr.depth))
        throw Error(Errc::OutOfTable, "order " + addr.order.str() + " exceeds 2^" + std::to_string(addr.depth));
    return stern(addr.order);
}

SdiQuadruple sdi_quadruple(const SdiAddress& addr) {
    const Nat& m = addr.order;
    if (!below_top(m, addr.depth))
        throw Error(Errc::OutOfTable,
                    "quadruple needs order below 2^" + std::to_string(addr.depth) + ", got " + m.str());
    Nat top = pow2(addr.depth);
    return {stern(m + 1), stern(m), stern(top - m - 1), stern(top - m)};
}

QuadrupleCache::QuadrupleCache(std::size_t capacity) : capacity_(capacity == 0 ? 1 : capacity) {}

std::size_t QuadrupleCache::KeyHash::operator()(const Key& k) const {
    auto low = static_cast<std::uint64_t>(k.second & Nat(UINT64_MAX));
    return std::hash<std::uint64_t>()(low * 1000003u + k.first);
}

SdiQuadruple QuadrupleCache::get(const SdiAddress& addr) {
    Key key{addr.depth, addr.order};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = index_.find(key);
        if (it != index_.end()) {
            lru_.splice(lru_.begin(), lru_, it->second);
            ++hits_;
            return it->second->second;
        }
    }
    SdiQuadruple value = sdi_quadruple(addr);
    std::lock_guard<std::mutex> lock(mu_);
    if (index_.find(key) == index_.end()) {
        lru_.emplace_front(key, value);
        index_.emplace(std::move(key), lru_.begin());
        if (lru_.size() > capacity_) {
            index_.erase(lru_.back().first);
            lru_.pop_back();
        }
    }
    return value;
}

std::size_t QuadrupleCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return lru_.size();
}

std::size_t QuadrupleCache::hits() const {
    std::lock_guard<std::mutex> lock(mu_);
    return hits_;
}

}  // namespace diatomic
