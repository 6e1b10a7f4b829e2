#include "artin/error.hpp"

namespace artin {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ArithmeticOverflow: return "ArithmeticOverflow";
    case Errc::InvalidValue: return "InvalidValue";
    case Errc::NotInHol: return "NotInHol";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NonpositivePivot: return "NonpositivePivot";
    case Errc::NoRelation: return "NoRelation";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EqualIndices: return "EqualIndices";
    case Errc::InvalidSubset: return "InvalidSubset";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::MixedPlans: return "MixedPlans";
    case Errc::EngineMismatch: return "EngineMismatch";
    case Errc::IoError: return "IoError";
    case Errc::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace artin
