#ifndef PERIODICA_ERROR_HPP_
#define PERIODICA_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace periodica {

enum class ErrorCode {
  InvalidInput,
  SizeMismatch,
  EmptyGenerator,
  NotAssociative,
  NotGroup,
  NoSubgroup,
  NotLeftIdentity,
  NotLeftInvertible,
  NotLeftSubgroup,
  NotLeftFactor,
  BadFactorization,
  NotFound,
  NotUpperPeriodic,
  NotPeriodic,
  PreconditionFailed,
  TooManyPairs,
  NotInSet,
  SearchSpaceTooLarge,
  NotATopology,
  TooLarge,
  ZeroModulus,
  Unsupported,
  Clash,
  EmptySet,
  NotRepresentable,
};

std::string_view error_name(ErrorCode code);

// Domain failure with a stable machine-readable code. The CLI maps these to
// exit status 1 and a JSON object on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace periodica

#endif  // PERIODICA_ERROR_HPP_
