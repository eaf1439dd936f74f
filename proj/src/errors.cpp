#include "qshuffle/errors.hpp"

namespace qshuffle {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::WrongLength: return "WrongLength";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::CalibrationFailure: return "CalibrationFailure";
    case ErrorKind::LeadingWordMismatch: return "LeadingWordMismatch";
    case ErrorKind::NotGoodWord: return "NotGoodWord";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::TriangularityViolation: return "TriangularityViolation";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::CacheCorrupt: return "CacheCorrupt";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::AmbiguousExtreme: return "AmbiguousExtreme";
    case ErrorKind::WrongType: return "WrongType";
    case ErrorKind::NonDefaultOrder: return "NonDefaultOrder";
    case ErrorKind::SegmentTooLong: return "SegmentTooLong";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool Error::is_engine_error() const noexcept {
  switch (kind_) {
    case ErrorKind::NotAntisymmetric:
    case ErrorKind::CalibrationFailure:
    case ErrorKind::LeadingWordMismatch:
    case ErrorKind::NotInImage:
    case ErrorKind::TriangularityViolation:
    case ErrorKind::NonConvergence:
    case ErrorKind::CacheCorrupt:
    case ErrorKind::InexactDivision:
    case ErrorKind::AmbiguousExtreme:
    case ErrorKind::BudgetExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace qshuffle
