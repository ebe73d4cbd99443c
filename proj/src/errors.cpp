#include "chios/errors.hpp"

namespace chios {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::ComparableCircuits: return "ComparableCircuits";
    case ErrorKind::NotUnidependent: return "NotUnidependent";
    case ErrorKind::LoopPresent: return "LoopPresent";
    case ErrorKind::LoopContraction: return "LoopContraction";
    case ErrorKind::NotAFlat: return "NotAFlat";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotAffineNormalized: return "NotAffineNormalized";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    }
    return "UnknownError";
}

} // namespace chios
