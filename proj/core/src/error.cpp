#include "kidrank/error.hpp"

namespace kidrank {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateIdeal: return "DuplicateIdeal";
    case ErrorCode::MissingLabels: return "MissingLabels";
    case ErrorCode::EmptySnippet: return "EmptySnippet";
    case ErrorCode::EmptyTermList: return "EmptyTermList";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::SingleClassData: return "SingleClassData";
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::ServiceUnavailable: return "ServiceUnavailable";
    case ErrorCode::MalformedScore: return "MalformedScore";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ListTooLong: return "ListTooLong";
    case ErrorCode::EmptyTrainingSet: return "EmptyTrainingSet";
    case ErrorCode::DegenerateLists: return "DegenerateLists";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::MissingFeatures: return "MissingFeatures";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::CorruptModel: return "CorruptModel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ClientError: return "ClientError";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InsufficientQueries: return "InsufficientQueries";
  }
  return "UnknownError";
}

}  // namespace kidrank
