#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tdmsd {

enum class ErrorCode {
  IndexOutOfRange,
  LoopEdge,
  EdgeNotPresent,
  NotInSet,
  TooLarge,
  TooSmall,
  IsolatedVertex,
  IsStar,
  NotFound,
  Disconnected,
  WrongStatus,
  NotATree,
  NotInnerEdge,
  OutOfRange,
  MalformedInput,
  UnknownTheorem,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace tdmsd
