#pragma once

#include <stdexcept>
#include <string>

namespace socle {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: wrong exponent length, mixed ambient rings, degree-incompatible maps.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined for the given input (e.g. Frobenius power in characteristic 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A homological index was requested beyond the computed truncation of a resolution.
class InsufficientTruncation : public Error {
 public:
  using Error::Error;
};

/// The Koszul direct-limit oracle did not stabilize within the allowed s range.
class UnstableLimit : public Error {
 public:
  using Error::Error;
};

/// No injective homogeneous map Omega -> R was found within the search budget.
class NoEmbeddingFound : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same invariant disagree.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis required by an experiment does not hold on the input.
class HypothesisRefused : public Error {
 public:
  using Error::Error;
};

}  // namespace socle
