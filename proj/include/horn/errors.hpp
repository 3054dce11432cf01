// errors.hpp -- exception types raised across the library

#ifndef HORN_ERRORS_HPP_
#define HORN_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "horn/atom.hpp"

namespace horn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument mentions atoms outside the required ambient alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Priming would collide with an atom already present in the alphabet.
class PrimeCollisionError : public Error {
 public:
  using Error::Error;
};

// No level mapping exists; carries one witness cycle of atoms, e.g. [a, b]
// for a -> b -> a (a single atom for a self-loop).
class CyclicError : public Error {
 public:
  explicit CyclicError(std::vector<Atom> cycle)
      : Error("theory is cyclic: " + describe(cycle)),
        cycle_(std::move(cycle)) {}

  const std::vector<Atom>& cycle() const noexcept { return cycle_; }

 private:
  static std::string describe(const std::vector<Atom>& cycle) {
    std::string out;
    for (const Atom& a : cycle) {
      out += a.str();
      out += " -> ";
    }
    if (!cycle.empty()) out += cycle.front().str();
    return out;
  }

  std::vector<Atom> cycle_;
};

// Text could not be parsed; position is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": expected " + expected),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

// Errors raised while evaluating meta-calculus expressions.
class EvalError : public Error {
 public:
  using Error::Error;
};

class UnboundIdentifierError : public EvalError {
 public:
  explicit UnboundIdentifierError(const std::string& name)
      : EvalError("unbound identifier: " + name) {}
};

class ArityError : public EvalError {
 public:
  using EvalError::EvalError;
};

// Exhaustive enumeration was requested over an intractable domain.
class DomainTooLargeError : public Error {
 public:
  using Error::Error;
};

class UnknownLawError : public Error {
 public:
  explicit UnknownLawError(const std::string& id)
      : Error("unknown law: " + id) {}
};

class UnsatisfiableParamsError : public Error {
 public:
  using Error::Error;
};

// A self-check that can only fail on an implementation bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace horn

#endif  // HORN_ERRORS_HPP_
