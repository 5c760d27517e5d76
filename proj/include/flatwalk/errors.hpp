#pragma once

#include <stdexcept>
#include <string>

namespace flatwalk {

// Domain errors carry a stable code (e.g. "ClosureViolation") so the CLI can
// render "module/Code: message" and tests can match on the code.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, const std::string& code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace flatwalk
