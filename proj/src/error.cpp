#include "diatomic/error.hpp"

namespace diatomic {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::OutOfTable: return "OutOfTable";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::TerminalDesign: return "TerminalDesign";
        case Errc::MalformedRuns: return "MalformedRuns";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::NotUnimodular: return "NotUnimodular";
        case Errc::NegativeEntry: return "NegativeEntry";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::InsufficientBits: return "InsufficientBits";
        case Errc::InvalidPeriod: return "InvalidPeriod";
        case Errc::PerfectSquare: return "PerfectSquare";
        case Errc::NonPositive: return "NonPositive";
        case Errc::ZeroLength: return "ZeroLength";
        case Errc::Indeterminate: return "Indeterminate";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace diatomic
