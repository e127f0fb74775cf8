#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Caller passed arguments outside an operation's contract (bad ids, bad
// ranges, malformed input files).  Maps to CLI exit code 2.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation's mathematical hypothesis does not hold for the given input
// (e.g. a degree bound, or a cycle edge that is not strong).
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// The family generator could not reach the requested sigma threshold within
// its mutation budget.  Maps to CLI exit code 3.
struct GenerationFailure : std::runtime_error {
  explicit GenerationFailure(const std::string& what) : std::runtime_error(what) {}
};

// A statement that is proved for all valid inputs failed on a concrete one.
// Either the library is wrong or the input is a publishable counterexample;
// both deserve a loud stop.
struct TheoremViolation : std::logic_error {
  explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rainbow
