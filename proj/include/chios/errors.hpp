#ifndef CHIOS_ERRORS_HPP
#define CHIOS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chios {

/// Failure categories surfaced by the library. Parse covers malformed
/// input files; everything else is a domain error.
enum class ErrorKind {
    ElementOutOfRange,
    ComparableCircuits,
    NotUnidependent,
    LoopPresent,
    LoopContraction,
    NotAFlat,
    DependentInput,
    SizeMismatch,
    InconsistentSystem,
    NotInIdeal,
    NotDiagonal,
    NotSimple,
    NotAffineNormalized,
    ParseError,
    ValidationError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace chios

#endif
