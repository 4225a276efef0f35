#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "diatomic/integer.hpp"
#include "diatomic/theta.hpp"

namespace diatomic {

// Finite binary word {m}_n, or the terminal {2^n}_n written 1 0^n t.
class FiniteDesign {
public:
    FiniteDesign() = default;  // the empty design

    // Throws SyntaxError on characters other than '0' and '1'.
    static FiniteDesign word(std::string bits);
    static FiniteDesign terminal(std::size_t n);
    // {m}_n for 0 <= m <= 2^n; m = 2^n gives the terminal design.
    static FiniteDesign from_number(const Nat& m, std::size_t n);

    bool is_terminal() const { return terminal_; }
    bool empty() const { return !terminal_ && bits_.empty(); }
    std::size_t length() const { return bits_.size(); }
    // The word itself; for a terminal design, its n zeros.
    const std::string& bits() const { return bits_; }

    std::string to_string() const;

    friend bool operator==(const FiniteDesign&, const FiniteDesign&) = default;

private:
    std::string bits_;
    bool terminal_ = false;
};

// Eventually periodic word pre (per)(per)... in canonical form.
class PeriodicDesign {
public:
    // Canonicalizes. Throws InvalidPeriod for an empty, all-0 or all-1 period,
    // SyntaxError for non-bit characters.
    static PeriodicDesign make(std::string preperiod, std::string period);

    const std::string& preperiod() const { return pre_; }
    const std::string& period() const { return per_; }
    bool is_purely_periodic() const { return pre_.empty(); }

    // First n bits of the infinite word.
    std::string prefix(std::size_t n) const;
    std::string to_string() const;

    friend bool operator==(const PeriodicDesign&, const PeriodicDesign&) = default;

private:
    PeriodicDesign(std::string pre, std::string per) : pre_(std::move(pre)), per_(std::move(per)) {}

    std::string pre_;
    std::string per_;
};

using Design = std::variant<FiniteDesign, PeriodicDesign>;

Design parse_design(std::string_view text);
std::string to_string(const Design& d);

// Alternating block lengths 1^k0 0^k1 ... 1^k(l-1), l odd. Interior entries
// are at least 1; the two ends may be 0.
class RunLengths {
public:
    RunLengths() : ks_{0} {}
    // Throws MalformedRuns if the invariants fail.
    explicit RunLengths(std::vector<Nat> ks);

    const std::vector<Nat>& values() const { return ks_; }
    std::size_t size() const { return ks_.size(); }
    const Nat& operator[](std::size_t i) const { return ks_[i]; }
    const Nat& front() const { return ks_.front(); }
    const Nat& back() const { return ks_.back(); }

    RunLengths reversed() const;

    friend bool operator==(const RunLengths&, const RunLengths&) = default;

private:
    std::vector<Nat> ks_;
};

RunLengths runs(const FiniteDesign& d);
FiniteDesign from_runs(const RunLengths& ks);

struct DesignNumber {
    Nat m;
    std::size_t n = 0;

    friend bool operator==(const DesignNumber&, const DesignNumber&) = default;
};

DesignNumber design_number(const FiniteDesign& d);

// Euclidean quotients (r0, ..., r_{t-1}) of a coprime pair.
std::vector<Nat> partial_quotients(const Nat& a, const Nat& b);
// The coprime pair whose quotients are qs.
std::pair<Nat, Nat> realizing_pair(const std::vector<Nat>& qs);
FiniteDesign euclidean_design(const Nat& a, const Nat& b);

FiniteDesign conjugate(const FiniteDesign& d);
PeriodicDesign conjugate(const PeriodicDesign& d);
Design conjugate(const Design& d);

// Bitwise complement {2^n - (m+1)}_n of a non-terminal design.
FiniteDesign complement(const FiniteDesign& d);

FiniteDesign inverse_design(const FiniteDesign& d);

FiniteDesign compose(const FiniteDesign& d, const FiniteDesign& d2);
PeriodicDesign compose(const FiniteDesign& d, const PeriodicDesign& d2);
Design compose(const FiniteDesign& d, const Design& d2);

FiniteDesign reduce(const FiniteDesign& d);
bool is_reduced(const FiniteDesign& d);
bool is_primitive(const FiniteDesign& d);

ThetaValue theta_of(const FiniteDesign& d);
ThetaValue theta_of(const PeriodicDesign& d);
ThetaValue theta_of(const Design& d);

Design design_of_theta(const ThetaValue& t);

}  // namespace diatomic
