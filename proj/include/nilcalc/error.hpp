#pragma once

#include <stdexcept>
#include <string>

namespace nilcalc {

// Bad user input: unknown generator, malformed syntax, invalid tables.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structural misuse: mixing alphabets, mismatched bases or class bounds.
class MismatchError : public std::runtime_error {
 public:
  explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was hit (rewriting fuel, closure bound, ...).
// Never silent: callers either handle it or it surfaces as exit code 3.
class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nilcalc
