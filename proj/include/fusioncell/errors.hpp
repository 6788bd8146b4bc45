#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusioncell {

enum class ErrorKind {
  Parse,
  InvalidSpec,
  InvalidInput,
  SubgroupMismatch,
  OrderCapExceeded,
  ExternalDataRequired,
  RelationCheckFailed,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

// Process exit status the CLI uses for each error kind.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace fusioncell
