#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halve2 {

enum class ErrorKind {
  EvenOrSmallModulus,
  NotPrime,
  ModulusTooLarge,
  DivisionByZero,
  SpecMismatch,
  Parse,
  RepeatedRoot,
  NotOnCurve,
  InfinityInput,
  NotHalvable,
  InvalidTriple,
  DegenerateDenominator,
  RootsNotSquare,
  FieldNotFinite,
  BoundExceeded,
  InvalidArgument,
  InvariantBreach,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this type; `kind()` is stable,
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace halve2
