#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicyclic {

enum class ErrorCode {
  kNotLatin,
  kNoIdentity,
  kNotAssociative,
  kOrderTooLarge,
  kBadParameters,
  kNotSubgroup,
  kNotCentral,
  kMatchingNotIso,
  kNotNormal,
  kBudgetExceeded,
  kRankTooHigh,
  kNotBicyclic,
  kUnmatchedGroup,
  kH2TooLarge,
  kOutOfRange,
  kParseError,
  kCacheCorrupt,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this type; code() lets callers branch
// without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bicyclic
