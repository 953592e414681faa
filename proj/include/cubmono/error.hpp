#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubmono {

enum class ErrorKind {
  InvalidInput,
  NonConvergence,
  SingularParameter,
  DegenerateCurve,
  SingularPoint,
  NotAFlex,
  AmbiguousIncidence,
  NoSixer,
  BadIncidencePattern,
  NonIntegralImage,
  FormViolation,
  CapExceeded,
  NotAMember,
  AmbiguousMatching,
  InconsistentProjection,
  TransformResidual,
  NoUniqueMatch,
  NotASubgroup,
  WrongOrder,
  NotIsomorphic,
  FixtureLoad,
};

std::string_view to_string(ErrorKind kind);

/// True for failures that a run at higher precision or finer step size may cure.
bool is_numerical_ambiguity(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cubmono
