#pragma once

#include <stdexcept>
#include <string>

namespace covers {

// Error hierarchy shared across modules. Each condition the library can
// reject carries its own type so callers (and the CLI) can map failures to
// exit codes without string matching.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct OrderMismatch : Error {
  explicit OrderMismatch(const std::string& what) : Error(what) {}
};

struct NotDivisible : Error {
  explicit NotDivisible(const std::string& what) : Error(what) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& what) : Error(what) {}
};

struct InvalidParams : Error {
  explicit InvalidParams(const std::string& what) : Error(what) {}
};

struct InconsistentPresentation : Error {
  explicit InconsistentPresentation(const std::string& what) : Error(what) {}
};

struct NotPrime : Error {
  explicit NotPrime(const std::string& what) : Error(what) {}
};

struct PathDependence : Error {
  explicit PathDependence(const std::string& what) : Error(what) {}
};

struct InvalidData : Error {
  explicit InvalidData(const std::string& what) : Error(what) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace covers
