#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace artin {

enum class Errc {
  LengthMismatch,
  ArithmeticOverflow,
  InvalidValue,
  NotInHol,
  ZeroElement,
  NonpositivePivot,
  NoRelation,
  IndexOutOfRange,
  EqualIndices,
  InvalidSubset,
  RankTooSmall,
  CapExceeded,
  MixedPlans,
  EngineMismatch,
  IoError,
  UsageError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace artin
