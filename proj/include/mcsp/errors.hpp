#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcsp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance refers to something that does not exist (variable out of range,
// duplicate variable inside one constraint, ...).
class MalformedInstance : public Error {
 public:
  using Error::Error;
};

// A caller violated an operation's documented precondition (wrong constraint
// kind, cyclic incidence graph handed to the forest solver, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Refused because the work would exceed a configured limit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A combinatorial lemma the algorithm relies on did not hold on this input.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

// A runtime-audited invariant failed. Always a bug or a violated assumption.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Code {
    kMissingHeader,
    kBadHeader,
    kDuplicateHeader,
    kUnknownLineKind,
    kBadNumber,
    kBadLiteral,
    kDuplicateVariable,
    kOppositeLiterals,
    kMajorityThreshold,
    kMissingTerminator,
    kTrailingTokens,
    kCountMismatch,
    kIntraPartEdge,
    kVertexOutOfRange,
  };

  ParseError(Code code, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what),
        code_(code),
        line_(line) {}

  Code code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  Code code_;
  std::size_t line_;
};

}  // namespace mcsp
