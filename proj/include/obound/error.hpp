#ifndef OBOUND_ERROR_HPP
#define OBOUND_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace obound {

enum class Errc {
    InvalidArgument,
    UnsortedOrOutOfRange,
    ConductorPredecessorIsMember,
    NotClosedUnderAddition,
    NotAMember,
    Overflow,
    BudgetExceeded,
    DisjointnessViolation,
};

constexpr std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnsortedOrOutOfRange: return "UnsortedOrOutOfRange";
    case Errc::ConductorPredecessorIsMember: return "ConductorPredecessorIsMember";
    case Errc::NotClosedUnderAddition: return "NotClosedUnderAddition";
    case Errc::NotAMember: return "NotAMember";
    case Errc::Overflow: return "Overflow";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DisjointnessViolation: return "DisjointnessViolation";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace obound

#endif // OBOUND_ERROR_HPP
