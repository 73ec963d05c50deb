#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercolor {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: parameters, instances, colorings.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class InvalidHypergraph : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidImage : public Error {
 public:
  using Error::Error;
};

class InvalidColoring : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  // 1-based line number of the offending input line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotReached : public Error {
 public:
  using Error::Error;
};

class PaletteExhausted : public Error {
 public:
  using Error::Error;
};

class BrooksPrecondition : public Error {
 public:
  using Error::Error;
};

class CliqueComponent : public Error {
 public:
  explicit CliqueComponent(std::vector<std::vector<std::size_t>> components)
      : Error("graph has " + std::to_string(components.size()) +
              " component(s) that are cliques on k+1 vertices"),
        components_(std::move(components)) {}

  const std::vector<std::vector<std::size_t>>& components() const noexcept {
    return components_;
  }

 private:
  std::vector<std::vector<std::size_t>> components_;
};

class DeltaTooSmall : public Error {
 public:
  using Error::Error;
};

// The k-color route does not apply (needs min hyperedge size >= 3 and k >= 3).
class UseKPlusOne : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

// Internal invariant broken. Valid input never raises these.
class InternalError : public Error {
 public:
  using Error::Error;
};

class InvalidRotation : public InternalError {
 public:
  using InternalError::InternalError;
};

class LemmaViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

class PipelineInvariantViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace hypercolor
