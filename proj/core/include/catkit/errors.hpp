#pragma once

#include <stdexcept>
#include <string>

namespace catkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes, strand counts, or degrees that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the domain of an operation (bad index, non-unit inverse, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A brute-force enumeration was asked to run beyond its documented size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON files, diagram descriptions, tables).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace catkit
