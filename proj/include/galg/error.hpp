#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace galg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad group descriptors, tables, words or files.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A Cayley table that fails a group axiom. `witness` holds the element
/// indices exhibiting the failure.
class GroupAxiomError : public InputError {
 public:
  GroupAxiomError(std::string axiom, std::vector<std::size_t> witness);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::size_t> witness_;
};

/// A configured work bound would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace galg
