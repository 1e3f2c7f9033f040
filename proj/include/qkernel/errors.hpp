#pragma once

#include <stdexcept>
#include <string>

namespace qk {

/// Base class for all errors raised by the kernel.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct PoleAtOne : Error {
  PoleAtOne() : Error("expression has a pole at q = 1") {}
  explicit PoleAtOne(const std::string& what) : Error(what) {}
};

struct AlphabetMismatch : Error {
  AlphabetMismatch() : Error("operands belong to different generator alphabets") {}
  explicit AlphabetMismatch(const std::string& what) : Error(what) {}
};

struct MissingImage : Error {
  explicit MissingImage(const std::string& gen)
      : Error("no image provided for generator '" + gen + "'") {}
};

struct StepLimitExceeded : Error {
  explicit StepLimitExceeded(unsigned long long limit)
      : Error("rewrite step limit exceeded (" + std::to_string(limit) + " applications)") {}
};

struct UnknownElement : Error {
  explicit UnknownElement(const std::string& name) : Error("unknown element '" + name + "'") {}
};

struct UnknownGenerator : Error {
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator or symbol '" + name + "'") {}
};

struct UnknownPresentation : Error {
  explicit UnknownPresentation(const std::string& name)
      : Error("unknown presentation '" + name + "'") {}
};

struct OddN : Error {
  OddN() : Error("finite-dimensional truncation requires an even dimension parameter N") {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(const std::string& what, int line_, int column_)
      : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " +
              what),
        line(line_),
        column(column_) {}
};

}  // namespace qk
