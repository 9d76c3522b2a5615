#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dcut {

/// Malformed input text (graph, colouring or CNF file).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string name, const std::string& detail)
      : std::invalid_argument(name + ": " + detail), name_(std::move(name)) {}

  /// Short name of the violated condition, e.g. "degree bound".
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// An exponential routine was asked to run above its size ceiling.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace dcut
