#include "fusioncell/errors.hpp"

namespace fusioncell {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SubgroupMismatch: return "SubgroupMismatch";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::ExternalDataRequired: return "ExternalDataRequired";
    case ErrorKind::RelationCheckFailed: return "RelationCheckFailed";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidSpec:
    case ErrorKind::InvalidInput:
    case ErrorKind::SubgroupMismatch:
      return 2;
    case ErrorKind::OrderCapExceeded:
      return 3;
    case ErrorKind::ExternalDataRequired:
      return 4;
    case ErrorKind::RelationCheckFailed:
    case ErrorKind::InvariantViolation:
      return 5;
  }
  return 5;
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fusioncell
