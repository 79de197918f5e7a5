#include "frsim/error.hpp"

namespace frsim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MembershipOutOfRange: return "MembershipOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::InvalidRelation: return "InvalidRelation";
    case ErrorKind::MissingWordnetFile: return "MissingWordnetFile";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NoCommonAncestor: return "NoCommonAncestor";
    case ErrorKind::UnknownVariableOrTerm: return "UnknownVariableOrTerm";
    case ErrorKind::ZeroAggregate: return "ZeroAggregate";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownTerm: return "UnknownTerm";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::EmptySentence: return "EmptySentence";
    case ErrorKind::FileNotFound: return "FileNotFound";
    case ErrorKind::MissingColumn: return "MissingColumn";
    case ErrorKind::RowError: return "RowError";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::InsufficientRecords: return "InsufficientRecords";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
  }
  return "Unknown";
}

}  // namespace frsim
