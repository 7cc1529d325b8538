#pragma once

#include <stdexcept>
#include <string>

namespace kidrank {

// Stable error identities shared across the toolkit. Tests and the CLI
// dispatch on the code, not on message text.
enum class ErrorCode {
  // model
  DuplicateIdeal,
  MissingLabels,
  EmptySnippet,
  // objectionability
  EmptyTermList,
  InsufficientData,
  SingleClassData,
  // scorers
  EmptyText,
  ServiceUnavailable,
  MalformedScore,
  DomainError,
  // metrics
  ListTooLong,
  // ltr
  EmptyTrainingSet,
  DegenerateLists,
  SchemaMismatch,
  MissingFeatures,
  // persistence
  IoError,
  VersionMismatch,
  CorruptModel,
  ParseError,
  // dataset
  ClientError,
  EmptyCorpus,
  // cli
  ConfigError,
  InsufficientQueries,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kidrank
