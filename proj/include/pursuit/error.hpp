#pragma once

#include <stdexcept>
#include <string>

namespace pursuit {

enum class ErrorKind {
  InvalidVertex,     // vertex id or name out of range / unknown
  InvalidParameter,  // bad argument (k, t, p, caps, mismatched kinds, ...)
  GraphLoop,         // construction saw a loop arc (v, v)
  GraphAntiparallel, // construction saw both (u, v) and (v, u)
  GraphInvalid,      // other structural problem (duplicate names, ...)
  ResourceLimit,     // arena cap, enumeration cap, timeout
  WitnessInvalid,    // retract witness does not hold on this graph
  NoStrategy,        // strategy requested for a game the cops lose
  RuleViolation,     // a policy proposed an illegal move
  Parse,             // malformed input file
  Internal,          // broken internal invariant
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

} // namespace pursuit
