#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace optcyc {

enum class Errc {
  NonPrimeCharacteristic,
  ReducibleModulus,
  NonPrimitiveRoot,
  FieldTooLarge,
  DivisionByZero,
  DivisionByZeroPoly,
  LengthMismatch,
  NotADivisor,
  InvalidDivisorPair,
  RankDeficient,
  EnumerationTooLarge,
  NotCyclic,
  SingularSystem,
  NonIntegerSolution,
  InexactDivision,
  ZeroCode,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace optcyc
