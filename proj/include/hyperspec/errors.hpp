#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A hypergraph or parameter set violating a structural precondition.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// Enumeration or dense materialization would exceed its size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Operation defined only for uniform hypergraphs was given a non-uniform one.
class NotUniform : public Error {
 public:
  NotUniform() : Error("edge parameters defined for uniform hypergraphs only") {}
};

/// The Perron vector is unique and positive only on connected instances.
class Disconnected : public Error {
 public:
  explicit Disconnected(std::size_t components)
      : Error("hypergraph is disconnected (" + std::to_string(components) +
              " components): the positive principal eigenvector exists and is "
              "unique only for connected hypergraphs"),
        components_(components) {}
  std::size_t components() const noexcept { return components_; }

 private:
  std::size_t components_;
};

class NoEdges : public Error {
 public:
  NoEdges()
      : Error("hypergraph has no edges: the adjacency tensor is zero and no "
              "principal eigenpair is defined") {}
};

/// Iteration budget exhausted; carries the last Collatz bracket.
class NotConverged : public Error {
 public:
  NotConverged(std::size_t iterations, double lo, double hi)
      : Error("power iteration did not converge after " +
              std::to_string(iterations) + " iterations; last bracket [" +
              std::to_string(lo) + ", " + std::to_string(hi) + "]"),
        iterations_(iterations),
        lo_(lo),
        hi_(hi) {}
  std::size_t iterations() const noexcept { return iterations_; }
  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  std::size_t iterations_;
  double lo_;
  double hi_;
};

}  // namespace hyperspec
