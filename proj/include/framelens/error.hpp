#pragma once

#include <stdexcept>
#include <string>

namespace framelens {

// Base of every error the toolkit raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters or missing configuration data (bad thresholds, missing lexicon).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A data file could not be loaded. The message names the file and line when known.
class LoadError : public Error {
 public:
  using Error::Error;
};

// Malformed free-text input, e.g. a model response that lacks required fields.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string raw)
      : Error(what), raw_(std::move(raw)) {}
  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

// Input values that violate an operation's preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Required (model, article) pairs are missing from an evaluation or agreement run.
class CoverageError : public Error {
 public:
  using Error::Error;
};

}  // namespace framelens
