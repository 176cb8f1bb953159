#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcla {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A generator name or index that is not declared in the graph at hand.
class UnknownGeneratorError : public Error {
public:
  explicit UnknownGeneratorError(const std::string& name)
      : Error("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

/// Malformed textual input (graph documents, expressions).
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_ = 0;
};

/// An operation needs a larger precomputed degree bound than available.
class DegreeError : public Error {
public:
  DegreeError(const std::string& what, int required_bound)
      : Error(what + " (required degree bound: " +
              std::to_string(required_bound) + ")"),
        required_bound_(required_bound) {}
  int required_bound() const { return required_bound_; }

private:
  int required_bound_ = 0;
};

/// An internal cross-check failed.  This must never fire on correct input;
/// it indicates a bug in the library itself, not in caller data.
class ConsistencyError : public Error {
public:
  explicit ConsistencyError(const std::string& what)
      : Error("internal consistency violation: " + what) {}
};

}  // namespace pcla
