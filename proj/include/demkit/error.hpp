#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace demkit {

// Domain error with a stable machine-readable code ("disconnected",
// "size-limit", ...) next to the human-readable message. The CLI maps the
// code into its JSON error envelope.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

}  // namespace demkit
