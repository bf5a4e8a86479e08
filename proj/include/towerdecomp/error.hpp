#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace towerdecomp {

enum class ErrorCode {
  ZeroInput,
  DivisionByZero,
  InexactDivision,
  ZeroArgument,
  NotProper,
  NotSimple,
  HigherGeneratorPresent,
  HeadMonomialNotOne,
  TowerNotSPrimitive,
  NotLogarithmic,
  PreconditionCLIMI,
  Degenerate,
  SyntaxError,
  UnknownName,
  InvalidTower,
  Internal,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library. `index()` carries the generator
/// level or the source offset when the code refers to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t index = 0)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::size_t index_;
};

}  // namespace towerdecomp
