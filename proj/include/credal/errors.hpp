#pragma once

#include <stdexcept>
#include <string>

namespace credal {

/// Base of every error the library throws. Catching this is enough for the
/// CLI to map failures onto exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two operands live on different possibility spaces.
class SpaceMismatch : public Error {
 public:
  explicit SpaceMismatch(const std::string& what = "operands live on different spaces")
      : Error(what) {}
};

/// A model or value violates one of its construction invariants.
class InvalidModel : public Error {
 public:
  using Error::Error;
};

class FNotInSet : public Error {
 public:
  explicit FNotInSet(const std::string& what = "gamble is not a member of the option set")
      : Error(what) {}
};

class MalformedProgram : public Error {
 public:
  using Error::Error;
};

class CriterionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class VertexFormRequired : public Error {
 public:
  explicit VertexFormRequired(
      const std::string& what = "operation needs a credal set given by its vertices")
      : Error(what) {}
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace credal
