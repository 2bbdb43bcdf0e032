#include "modlat/error.hpp"

namespace modlat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::CycleInCovers: return "CycleInCovers";
    case ErrorCode::NotTransitivelyReduced: return "NotTransitivelyReduced";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::TwoPointIntersection: return "TwoPointIntersection";
    case ErrorCode::LineTooSmall: return "LineTooSmall";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::PointNotOnLine: return "PointNotOnLine";
    case ErrorCode::NotModular: return "NotModular";
    case ErrorCode::EmptyChoice: return "EmptyChoice";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotACovering: return "NotACovering";
    case ErrorCode::ExpansionCapExceeded: return "ExpansionCapExceeded";
    case ErrorCode::OverlapFound: return "OverlapFound";
    case ErrorCode::NotAClosureSystem: return "NotAClosureSystem";
    case ErrorCode::NotAnMnElement: return "NotAnMnElement";
    case ErrorCode::ClaimViolated: return "ClaimViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace modlat
