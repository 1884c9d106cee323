#pragma once

#include <stdexcept>
#include <string>

namespace kakeya {

enum class ErrorCode {
  NonOddPrime,
  Overflow,
  DivisionByZero,
  ZeroCoefficient,
  ZeroRadius,
  ZeroDirection,
  IdenticalSpheres,
  NotANonsquare,
  NotASquareField,
  WrongDegree,
  BadDimension,
  BudgetExceeded,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kakeya
