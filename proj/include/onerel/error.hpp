#pragma once

#include <stdexcept>
#include <string>

namespace onerel {

enum class Errc {
  // input / usage
  InvalidCharacter,
  EmptyWord,
  ParseError,
  UnboundName,
  NotCyclicallyReduced,
  NotRootFree,
  IsProperPower,
  NotInCommutatorSubgroup,
  InvalidScl,
  InvalidRelator,
  UsageError,
  IoError,
  // model
  EdgePairingError,
  LabelMismatch,
  ZeroDegreeDisk,
  DegreeOneVertex,
  NotCancelling,
  NotReduced,
  ZeroTotalDegree,
  InvalidPod,
  MixedBasis,
  NoNormalizablePoint,
  NumericallyUnstable,
  InternalModelError,
  RejectionBudgetExceeded,
  // resources
  ResourceLimit,
};

const char* errc_name(Errc c);

/// CLI exit code class: 1 usage/input, 2 model, 3 resource limit.
int errc_exit_code(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace onerel
