#pragma once

#include <stdexcept>
#include <string>

namespace sscorpus {

// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FRES/FKGL requested for text without a single countable word.
class UndefinedReadability : public Error {
 public:
  UndefinedReadability() : Error("undefined readability (no words)") {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sscorpus
