#pragma once

#include <stdexcept>
#include <string>

namespace lrb {

// Every failure raised by the library carries a short machine-readable kind
// ("NotAssociative", "NotConnected", ...) plus a human readable detail that
// names a witness where one exists.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Failures of structural preconditions (connectedness, CW proxy, ...) as
// opposed to malformed input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lrb
