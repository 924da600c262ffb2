#pragma once

#include <stdexcept>
#include <string>

namespace permgraph {

enum class ErrorCode {
  dimension,
  capacity,
  parse,
  domain,
  underflow,
  io,
  invalid_argument,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carried by every failing operation in the library. The code
/// survives translation across the C boundary into a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace permgraph
