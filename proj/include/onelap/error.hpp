#pragma once

#include <stdexcept>
#include <string>

namespace onelap {

// Every failure mode the library reports. Tests match on the code, not the
// message text.
enum class ErrorCode {
    IsolatedVertex,
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    TooSmall,
    TooLarge,
    ParseError,
    LengthMismatch,
    NotOnX,
    ZeroVector,
    AllZeroPattern,
    NonpositiveLevel,
    Disconnected,
    ConstantVector,
    HypothesisViolated,
    ConvergenceFailure,
    DivisionByZero,
    Overflow,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace onelap
