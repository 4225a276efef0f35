#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diatomic {

enum class Errc {
    OutOfTable,
    SyntaxError,
    TerminalDesign,
    MalformedRuns,
    NotCoprime,
    ZeroInput,
    NotUnimodular,
    NegativeEntry,
    OutOfRange,
    InsufficientBits,
    InvalidPeriod,
    PerfectSquare,
    NonPositive,
    ZeroLength,
    Indeterminate,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace diatomic
