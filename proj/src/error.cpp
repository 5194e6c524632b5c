#include "onelap/error.hpp"

namespace onelap {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotOnX: return "NotOnX";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::AllZeroPattern: return "AllZeroPattern";
        case ErrorCode::NonpositiveLevel: return "NonpositiveLevel";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::ConstantVector: return "ConstantVector";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

} // namespace onelap
