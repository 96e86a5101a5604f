#pragma once

#include <stdexcept>
#include <string>

namespace lenequiv {

// Every failure raised by the library derives from Error so the CLI can map
// each category onto its own exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlphabetError : Error {
  using Error::Error;
};

struct DegenerateInputError : Error {
  using Error::Error;
};

// A matrix of the wrong isometry type (e.g. asking for the axis of a
// parabolic).
struct ClassificationError : Error {
  using Error::Error;
};

// Boundary points too close to decide crossing or sign reliably.
struct DegeneracyError : Error {
  using Error::Error;
};

struct SamplerError : Error {
  using Error::Error;
};

struct UnsupportedRankError : Error {
  using Error::Error;
};

// Enumeration did not stabilize before its hard cap.
struct InconclusiveError : Error {
  using Error::Error;
};

struct HypothesisError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct VerificationError : Error {
  using Error::Error;
};

}  // namespace lenequiv
