#pragma once

#include <stdexcept>
#include <string>

namespace cuntzcf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed surd, block, or word literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of an operation (e.g. not in Ω = (0,1) \ Q).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The number described is rational; only quadratic irrationals are supported.
class NotIrrational : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A Möbius image came out rational. Cannot happen for irrational input.
class DegenerateImage : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A partial quotient does not fit into a word letter.
class QuotientOverflow : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyWord : public Error {
 public:
  using Error::Error;
};

class NotPrimitive : public Error {
 public:
  using Error::Error;
};

class BadMultiplicity : public Error {
 public:
  using Error::Error;
};

/// On-demand extension of a truncated label space hit its hard cap.
class TruncationLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace cuntzcf
