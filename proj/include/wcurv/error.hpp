#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wcurv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed expression text. `position` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at offset " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}

  std::size_t position() const { return position_; }
  const std::string& detail() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

class UnboundSymbol : public Error {
 public:
  explicit UnboundSymbol(const std::string& name)
      : Error("unbound symbol '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Evaluation left the real domain. `subexpression` is the printed offending node.
class DomainError : public Error {
 public:
  DomainError(const std::string& subexpression, const std::string& reason)
      : Error("domain error in '" + subexpression + "': " + reason),
        subexpression_(subexpression) {}
  const std::string& subexpression() const { return subexpression_; }

 private:
  std::string subexpression_;
};

class DegenerateMetric : public Error {
 public:
  DegenerateMetric(const std::string& point, double determinant)
      : Error("degenerate metric at " + point + " (det = " + std::to_string(determinant) + ")"),
        determinant_(determinant) {}
  double determinant() const { return determinant_; }

 private:
  double determinant_;
};

class NormalizationError : public Error {
 public:
  NormalizationError(const std::string& point, double norm)
      : Error("fluid velocity not unit timelike at " + point +
              " (g_ab u^a u^b = " + std::to_string(norm) + ")"),
        norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

// Raised for invalid user input (metric files, specs); maps to CLI exit status 1.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace wcurv
