#include "cubmono/error.hpp"

namespace cubmono {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::SingularParameter: return "SingularParameter";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::NotAFlex: return "NotAFlex";
    case ErrorKind::AmbiguousIncidence: return "AmbiguousIncidence";
    case ErrorKind::NoSixer: return "NoSixer";
    case ErrorKind::BadIncidencePattern: return "BadIncidencePattern";
    case ErrorKind::NonIntegralImage: return "NonIntegralImage";
    case ErrorKind::FormViolation: return "FormViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::AmbiguousMatching: return "AmbiguousMatching";
    case ErrorKind::InconsistentProjection: return "InconsistentProjection";
    case ErrorKind::TransformResidual: return "TransformResidual";
    case ErrorKind::NoUniqueMatch: return "NoUniqueMatch";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::NotIsomorphic: return "NotIsomorphic";
    case ErrorKind::FixtureLoad: return "FixtureLoad";
  }
  return "Unknown";
}

bool is_numerical_ambiguity(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConvergence:
    case ErrorKind::AmbiguousIncidence:
    case ErrorKind::AmbiguousMatching:
    case ErrorKind::NoUniqueMatch:
    case ErrorKind::InconsistentProjection:
      return true;
    default:
      return false;
  }
}

}  // namespace cubmono
