#include "halve2/error.hpp"

namespace halve2 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EvenOrSmallModulus: return "EvenOrSmallModulus";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::RepeatedRoot: return "RepeatedRoot";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::InfinityInput: return "InfinityInput";
    case ErrorKind::NotHalvable: return "NotHalvable";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::RootsNotSquare: return "RootsNotSquare";
    case ErrorKind::FieldNotFinite: return "FieldNotFinite";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

}  // namespace halve2
