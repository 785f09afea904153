#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tagnav {

enum class ErrorCode {
  MalformedLine,
  DuplicateId,
  EmptyTag,
  EmptyFilter,
  ConflictingFilter,
  UnknownArticle,
  MissingArticle,
  EmptyQuery,
  NoPairs,
  Io,
  InvalidArgument,
  AddressInUse,
};

// Machine-readable snake_case name, used by the HTTP API.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised for a bad record in a line-oriented input file. Line numbers are 1-based.
class MalformedLineError : public Error {
 public:
  MalformedLineError(std::string path, std::size_t line, const std::string& why)
      : Error(ErrorCode::MalformedLine,
              path + ":" + std::to_string(line) + ": " + why),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

}  // namespace tagnav
