#include "permgraph/error.hpp"

namespace permgraph {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension: return "dimension error";
    case ErrorCode::capacity: return "capacity error";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::underflow: return "underflow error";
    case ErrorCode::io: return "i/o error";
    case ErrorCode::invalid_argument: return "invalid argument";
  }
  return "error";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace permgraph
