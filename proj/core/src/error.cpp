#include "solenoid/error.hpp"

namespace solenoid {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::MismatchedSpec: return "MismatchedSpec";
    case ErrorKind::MismatchedDepth: return "MismatchedDepth";
    case ErrorKind::BadIndices: return "BadIndices";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::DepthTooShallow: return "DepthTooShallow";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::QNotUsable: return "QNotUsable";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace solenoid
