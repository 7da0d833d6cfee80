#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greedy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural problem with an edge passed to build_hypergraph.
class HypergraphError : public Error {
 public:
  enum class Kind {
    BadUniformity,
    WrongCardinality,
    RepeatedVertex,
    VertexOutOfRange,
    DuplicateEdge,
  };

  HypergraphError(Kind kind, std::size_t edge_index, const std::string& what)
      : Error(what), kind_(kind), edge_index_(edge_index) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t edge_index() const noexcept { return edge_index_; }

 private:
  Kind kind_;
  std::size_t edge_index_;
};

/// Edge-list text that does not follow the `r N m` format.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Arguments outside an operation's domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Instance would exceed the configured size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Operation invoked on a state where it is undefined (empty pool, p <= 0, ...).
class StateError : public Error {
 public:
  using Error::Error;
};

}  // namespace greedy
