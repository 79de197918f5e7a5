#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frsim {

enum class ErrorKind {
  MembershipOutOfRange,
  LengthMismatch,
  UniverseMismatch,
  InvalidRelation,
  MissingWordnetFile,
  ParseError,
  NoCommonAncestor,
  UnknownVariableOrTerm,
  ZeroAggregate,
  SyntaxError,
  UnknownTerm,
  DuplicateName,
  DomainError,
  InvalidConfig,
  EmptySentence,
  FileNotFound,
  MissingColumn,
  RowError,
  EmptyInput,
  DegenerateInput,
  InsufficientRecords,
  EmptyGrid,
};

// Stable identifier, also used as the `error` field of CLI output.
std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace frsim
