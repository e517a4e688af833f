// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace densig {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Subsystem dimension lists that do not match the matrices they describe.
class DimsError : public Error {
public:
  explicit DimsError(const std::string &msg) : Error(msg) {}
};

// State-level validation failures: norm, trace, Hermiticity, positivity.
class StateError : public Error {
public:
  explicit StateError(const std::string &msg) : Error(msg) {}
};

// Mixture weights that are negative or do not sum to one.
class WeightError : public Error {
public:
  explicit WeightError(const std::string &msg) : Error(msg) {}
};

// A caller-supplied expansion basis that is not unitary.
class BasisError : public Error {
public:
  explicit BasisError(const std::string &msg) : Error(msg) {}
};

// Input to the Hermitian eigensolver that is not Hermitian within tolerance.
class NotHermitianError : public Error {
public:
  explicit NotHermitianError(const std::string &msg) : Error(msg) {}
};

// Solver breakdowns: non-convergence, failed internal consistency checks.
class NumericalError : public Error {
public:
  explicit NumericalError(const std::string &msg) : Error(msg) {}
};

// Syntax error in a state-description program. Carries the offending position.
class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string &msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

// Reference to a name that was never defined, or a duplicate definition.
class NameError : public Error {
public:
  NameError(int line, int col, const std::string &msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

} // namespace densig
