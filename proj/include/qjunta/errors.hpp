#pragma once

#include <stdexcept>
#include <string>

namespace qjunta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, bad parameters, or a violated precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A far fixture could not be certified at the requested distance.
class CertificationError : public Error {
 public:
  CertificationError(const std::string& what, double achieved)
      : Error(what), achieved_distance_(achieved) {}

  double achieved_distance() const noexcept { return achieved_distance_; }

 private:
  double achieved_distance_;
};

/// An exact computation would exceed a configured work or memory cap.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace qjunta
