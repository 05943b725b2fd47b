#ifndef MONEXT_ERROR_HPP_
#define MONEXT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace monext {

// Domain error categories surfaced by the toolkit. The CLI maps these to
// exit code 1; parse failures map to exit code 2.
enum class ErrorCode {
  OutOfRange,
  BadIdentity,
  NotAssociative,
  NotAHom,
  NotAnExtension,
  NotASubmonoid,
  NotASemilattice,
  NotMeetPreserving,
  ActionInvalid,
  FactorSystemInvalid,
  InvalidRelaxedAction,
  InvalidWSFactorSystem,
  NotSchreier,
  NotSchreierSplit,
  NotWeaklySchreier,
  NotWeaklySchreierSplit,
  NotSpecial,
  BadGeneratorChoice,
  KernelNotAbelianGroup,
  ActionsDiffer,
  OrderTooLarge,
  ParseError,
  InvariantViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Result of a boolean-with-witness check. `detail` describes the first
// failing instance; empty on success.
struct CheckResult {
  bool ok = true;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }

  static CheckResult pass() { return {true, {}}; }
  static CheckResult fail(std::string d) { return {false, std::move(d)}; }
};

}  // namespace monext

#endif  // MONEXT_ERROR_HPP_
