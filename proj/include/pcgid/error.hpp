#pragma once

#include <stdexcept>
#include <string>

namespace pcgid {

enum class ErrorCode {
  // wav parsing
  MalformedHeader,
  UnsupportedEncoding,
  TruncatedData,
  // spectrogram
  ClipTooShort,
  // wavelet / features
  EmptyMatrix,
  DimensionMismatch,
  TooManyLevels,
  // matcher
  LengthMismatch,
  EmptyDatabase,
  // datastore
  BadMagic,
  UnsupportedVersion,
  Truncated,
  CorruptRecord,
  IoFailure,
  // evaluation
  TooFewRecords,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::UnsupportedEncoding: return "UnsupportedEncoding";
    case ErrorCode::TruncatedData: return "TruncatedData";
    case ErrorCode::ClipTooShort: return "ClipTooShort";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooManyLevels: return "TooManyLevels";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyDatabase: return "EmptyDatabase";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::CorruptRecord: return "CorruptRecord";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::TooFewRecords: return "TooFewRecords";
  }
  return "Unknown";
}

/// Library error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pcgid
