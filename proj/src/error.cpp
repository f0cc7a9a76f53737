#include "tdmsd/error.hpp"

namespace tdmsd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorCode::NotInSet: return "NotInSet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::IsStar: return "IsStar";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::WrongStatus: return "WrongStatus";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotInnerEdge: return "NotInnerEdge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
  }
  return "Unknown";
}

}  // namespace tdmsd
