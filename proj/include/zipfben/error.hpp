#pragma once

#include <stdexcept>
#include <string>

namespace zipfben {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration, manifest, or command-line input.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Unreadable or undecodable input data.
class DataError : public Error {
public:
  using Error::Error;
};

/// A statistical precondition failed (window out of range, zero variance, ...).
class AnalysisError : public Error {
public:
  using Error::Error;
};

/// Correlation requested on a constant vector.
class UndefinedCorrelation : public AnalysisError {
public:
  using AnalysisError::AnalysisError;
};

} // namespace zipfben
