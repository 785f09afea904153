#include "tagnav/error.h"

namespace tagnav {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "malformed_line";
    case ErrorCode::DuplicateId: return "duplicate_id";
    case ErrorCode::EmptyTag: return "empty_tag";
    case ErrorCode::EmptyFilter: return "empty_filter";
    case ErrorCode::ConflictingFilter: return "conflicting_filter";
    case ErrorCode::UnknownArticle: return "unknown_article";
    case ErrorCode::MissingArticle: return "missing_article";
    case ErrorCode::EmptyQuery: return "empty_query";
    case ErrorCode::NoPairs: return "no_pairs";
    case ErrorCode::Io: return "io_error";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::AddressInUse: return "address_in_use";
  }
  return "internal";
}

}  // namespace tagnav
