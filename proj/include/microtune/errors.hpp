/// @file errors.hpp
/// @brief Error taxonomy shared by the microtune library and CLI.

#pragma once

#include <stdexcept>
#include <string>

namespace microtune {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violated a mathematical or encoding domain (non-positive Hz,
/// out-of-range MicroMidi, bad time span).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; messages carry the offending row number.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Invalid or contradictory configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An operation received an input with no usable data.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Too few data points for the requested estimation.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds the documented size limits of an exhaustive method.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Alignment cannot be produced (typically: the score is absent).
class AlignmentUnavailableError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure; messages carry the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace microtune
