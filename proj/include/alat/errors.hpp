#pragma once

#include <stdexcept>
#include <string>

namespace alat {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched shapes, wrong block sizes, malformed containers.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// Precondition violations on mathematically valid inputs
/// (non-projection where a projection is required, det outside the
/// admissible set, negative parameters, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Numeric breakdown inside a kernel (failed decomposition, singular pivot).
class NumericError : public Error {
public:
  using Error::Error;
};

/// A morphism-reconstruction pipeline step failed; the message names the step.
class ReconstructionError : public Error {
public:
  using Error::Error;
};

/// Malformed external input (JSON decode, CLI usage).
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace alat
