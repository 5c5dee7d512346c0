#pragma once

#include <stdexcept>
#include <string>

namespace krein {

/// Base for all library errors. `code()` is a stable machine-readable tag;
/// the CLI maps it to exit codes and error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define KREIN_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

KREIN_DEFINE_ERROR(DimensionMismatch);
KREIN_DEFINE_ERROR(SingularMatrix);
KREIN_DEFINE_ERROR(ZeroPivot);
KREIN_DEFINE_ERROR(EmptyOmega);
KREIN_DEFINE_ERROR(NotFound);
KREIN_DEFINE_ERROR(NotUnique);
KREIN_DEFINE_ERROR(MissingExteriorRule);
KREIN_DEFINE_ERROR(SingularBoundarySystem);
KREIN_DEFINE_ERROR(ResonantRankOne);
KREIN_DEFINE_ERROR(LambdaOnSpectrum);
KREIN_DEFINE_ERROR(ResonantDenominator);
KREIN_DEFINE_ERROR(ConfigError);
KREIN_DEFINE_ERROR(IoError);

#undef KREIN_DEFINE_ERROR

}  // namespace krein
