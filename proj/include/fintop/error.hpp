#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fintop {

enum class Errc {
    axiom_violation,
    size_out_of_range,
    empty_carrier,
    size_mismatch,
    empty_list,
    size_guard_exceeded,
    empty_family,
    not_closed,
    not_disjoint,
    bound_exhausted,
    io_error,
    parse_error,
    unknown_field,
    unknown_suite,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::axiom_violation: return "AxiomViolation";
    case Errc::size_out_of_range: return "SizeOutOfRange";
    case Errc::empty_carrier: return "EmptyCarrier";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::empty_list: return "EmptyList";
    case Errc::size_guard_exceeded: return "SizeGuardExceeded";
    case Errc::empty_family: return "EmptyFamily";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::bound_exhausted: return "BoundExhausted";
    case Errc::io_error: return "IoError";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_field: return "UnknownField";
    case Errc::unknown_suite: return "UnknownSuite";
    }
    return "Unknown";
}

/// Single exception type for the library; `code()` tells the failure kinds apart.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace fintop
