#pragma once

#include <stdexcept>
#include <string>

namespace sl2tilt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// layer/partner/completion called on the Steinberg index q-1.
class NoLayerError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Omega^{-1} of an omega-free symbol whose index is not a rim index.
class NotInvertibleSymbolically : public Error {
 public:
  using Error::Error;
};

/// ext_cor1 called outside its dichotomy.
class InvalidCase : public Error {
 public:
  using Error::Error;
};

/// A runtime extension dimension exceeded 1 or a ceiling form still extends.
class ExtensionDimensionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check of the tilt engine failed.
class EngineAssertion : public Error {
 public:
  using Error::Error;
};

/// A check that only makes sense for odd p was called with p = 2.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// No surjection from the projective cover was found.
class NoSurjectionFound : public Error {
 public:
  using Error::Error;
};

}  // namespace sl2tilt
