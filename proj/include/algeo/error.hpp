#pragma once

#include <stdexcept>
#include <string>

namespace algeo {

// Base class for all errors raised by the library. The CLI maps these to
// exit codes: input/validation errors -> 2, resource caps -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text. Carries the source path ("<string>" when parsing
// in-memory text) and a 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(std::string path, int line, const std::string& message)
      : Error(format(path, line, message)), path_(std::move(path)), line_(line) {}
  explicit ParseError(const std::string& message) : ParseError("<string>", 0, message) {}

  const std::string& path() const { return path_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& path, int line, const std::string& message) {
    if (line > 0) return path + ":" + std::to_string(line) + ": " + message;
    return path + ": " + message;
  }
  std::string path_;
  int line_;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A configured cap would be exceeded. `cap` names the violated limit so the
// CLI can report which flag raises it.
class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(std::string cap, const std::string& message)
      : Error(message + " (cap: " + cap + ")"), cap_(std::move(cap)) {}

  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class TableError : public Error {
 public:
  using Error::Error;
};

class EmptyCarrier : public Error {
 public:
  using Error::Error;
};

class GeneratorsInsufficient : public Error {
 public:
  using Error::Error;
};

class ElementNotInLattice : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class GroupAxiomViolation : public Error {
 public:
  using Error::Error;
};

class ActionNotHomomorphic : public Error {
 public:
  using Error::Error;
};

}  // namespace algeo
