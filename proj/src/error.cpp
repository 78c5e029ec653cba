#include "mukai/error.hpp"

namespace mukai {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IsotropyViolation: return "IsotropyViolation";
    case Errc::PositivityViolation: return "PositivityViolation";
    case Errc::NonIntegralImage: return "NonIntegralImage";
    case Errc::NotAnIsometry: return "NotAnIsometry";
    case Errc::WrongSquareNorm: return "WrongSquareNorm";
    case Errc::DegenerateGram: return "DegenerateGram";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::BadDimension: return "BadDimension";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::NormMismatch: return "NormMismatch";
    case Errc::NotPositive: return "NotPositive";
    case Errc::Precondition: return "Precondition";
    case Errc::Parse: return "Parse";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace mukai
