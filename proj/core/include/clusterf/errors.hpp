#pragma once

#include <stdexcept>
#include <string>

namespace clusterf {

// Base for every error raised by the library. Subclasses name the failure
// channel so callers (and the CLI exit-code mapping) can tell a bad input
// from a theorem-check failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidDirection : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroPolynomial : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotSkewSymmetrizable : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

// Division left a nonzero remainder. Inside seed mutation this means a bug:
// exchange binomials are always divisible by the outgoing variable.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

// A principal cluster variable failed to be homogeneous for the g-grading.
class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

// An F-polynomial without constant term 1 or with a negative coefficient,
// or a g-matrix row that is not sign-coherent.
class GhkkViolation : public Error {
 public:
  using Error::Error;
};

class IncompleteGraph : public Error {
 public:
  using Error::Error;
};

}  // namespace clusterf
