#pragma once

#include <stdexcept>
#include <string>

namespace fogsim {

// Machine-checkable failure codes. The string form appears in diagnostics and
// in ValidationReport entries.
enum class ErrorCode {
  // config / construction
  ParseError,
  SchemaViolation,
  UnknownPreset,
  DuplicateId,
  DanglingReference,
  CapacityExceeded,
  DisconnectedNode,
  InvalidWindow,
  UnknownBot,
  EmptyBotSet,
  UnknownRegion,
  MismatchedConfigs,
  IoError,
  // runtime
  PastEvent,
  HandlerFault,
  NoRoute,
  Unauthenticated,
  NoCapacity,
  EmptyWindow,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Config-stage failures map to CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Simulation-stage failures map to CLI exit code 3.
class SimFault : public Error {
 public:
  using Error::Error;
};

}  // namespace fogsim
