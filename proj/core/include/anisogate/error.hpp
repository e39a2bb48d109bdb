#pragma once

#include <stdexcept>
#include <string>

namespace anisogate {

/// Coarse classification of failures; the CLI maps these onto exit codes.
enum class ErrorKind {
  InvalidArgument,  // malformed input or violated precondition
  Degenerate,       // input is valid but admits no construction (e.g. empty wedge)
  Synthesis,        // a compiler could not meet its target within bounds
  Contract,         // a verification-contract violation (wrong pair, non-unitary, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace anisogate
