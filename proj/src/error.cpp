#include "bicyclic/error.hpp"

namespace bicyclic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotLatin: return "NotLatin";
    case ErrorCode::kNoIdentity: return "NoIdentity";
    case ErrorCode::kNotAssociative: return "NotAssociative";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kNotSubgroup: return "NotSubgroup";
    case ErrorCode::kNotCentral: return "NotCentral";
    case ErrorCode::kMatchingNotIso: return "MatchingNotIso";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kRankTooHigh: return "RankTooHigh";
    case ErrorCode::kNotBicyclic: return "NotBicyclic";
    case ErrorCode::kUnmatchedGroup: return "UnmatchedGroup";
    case ErrorCode::kH2TooLarge: return "H2TooLarge";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kCacheCorrupt: return "CacheCorrupt";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace bicyclic
