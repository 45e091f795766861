#include "fatcob/error.hpp"

namespace fatcob {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::DanglingHalfEdge: return "DanglingHalfEdge";
    case ErrorCode::WrongVertexOrder: return "WrongVertexOrder";
    case ErrorCode::FixedPointInvolution: return "FixedPointInvolution";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::NotALeaf: return "NotALeaf";
    case ErrorCode::InOutOverlap: return "InOutOverlap";
    case ErrorCode::ClosedNotSpecial: return "ClosedNotSpecial";
    case ErrorCode::ClosedSharesCycle: return "ClosedSharesCycle";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::ForestContainsCycle: return "ForestContainsCycle";
    case ErrorCode::DecorationDestroyed: return "DecorationDestroyed";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::EdgeCountMismatch: return "EdgeCountMismatch";
    case ErrorCode::InvalidMatch: return "InvalidMatch";
    case ErrorCode::NotGluablePairMorphism: return "NotGluablePairMorphism";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::NotGluable: return "NotGluable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

EdgeCountMismatchError::EdgeCountMismatchError(std::size_t pair, std::size_t k1, std::size_t k2)
    : Error(ErrorCode::EdgeCountMismatch,
            "pair " + std::to_string(pair) + ": outgoing cycle has " + std::to_string(k1) +
                " edges, incoming circle has " + std::to_string(k2)),
      pair_(pair),
      k1_(k1),
      k2_(k2) {}

ParseFailure::ParseFailure(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::ParseError,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace fatcob
