#pragma once

#include <stdexcept>
#include <string>

namespace tfd {

// Typed failure conditions surfaced by the numeric kernels. Every throw site
// names the condition so callers (and tests) can branch on kind() instead of
// parsing messages.
enum class ErrorKind {
  NonConvexPhi,
  GridTooSmall,
  DivergentRatio,
  NotModerate,
  IntegralDiverges,
  NoDecay,
  UnderDetermined,
  ConjugateCutoff,
  TruncationError,
  AliasError,
  ParameterOutOfRange,
  SearchExhausted,
  GridBoundaryMinimizer,
  NotAdmissible,
  ConstantUnavailable,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace tfd
