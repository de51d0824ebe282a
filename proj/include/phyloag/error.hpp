#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phyloag {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (Newick, polynomial, rational, FASTA, JSON config).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Invalid argument combination or contract violation on user-supplied data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An evaluation needed a value for a variable that was not supplied.
class MissingVariable : public ValidationError {
 public:
  explicit MissingVariable(const std::string& name)
      : ValidationError("no value supplied for variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Numerically degenerate input (all-zero tensor, rank-deficient sample).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

}  // namespace phyloag
