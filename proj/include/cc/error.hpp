#pragma once

#include <stdexcept>
#include <string>

namespace cc {

enum class Errc {
  LengthMismatch,
  OutOfRange,
  Parse,
  NoUpperBound,
  NotPairwiseCompatible,
  MalformedClass,
  MissingConjugacyClass,
  NotDominant,
  CapExceeded,
  ContextMismatch,
  NotDivisible,
  DivisionByZero,
  FrozenVertex,
  BalancingViolated,
  NonRegularTriangulation,
  NotTaut,
  BadParameter,
  RowNotCycle,
  VerificationFailed,
  Degenerate,
  DegreeMismatch,
  LimitExceeded,
  QuiverNotRestored,
  WeightMismatch,
  Unsupported,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cc
