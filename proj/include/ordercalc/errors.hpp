#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordercalc {

/// Base type for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Word enumeration was asked for more letters than the configured cap.
class CapExceededError : public Error {
 public:
  CapExceededError(unsigned requested, unsigned cap)
      : Error("word enumeration needs " + std::to_string(requested) +
              " letters, exceeding the cap of " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  unsigned requested() const { return requested_; }
  unsigned cap() const { return cap_; }

 private:
  unsigned requested_;
  unsigned cap_;
};

/// A balanced-only operation met a term with creator count != annihilator count.
class UnbalancedTermError : public Error {
 public:
  UnbalancedTermError(unsigned p, unsigned q)
      : Error("term ad^" + std::to_string(p) + " a^" + std::to_string(q) +
              " is not balanced (p != q)"),
        p_(p),
        q_(q) {}

  unsigned p() const { return p_; }
  unsigned q() const { return q_; }

 private:
  unsigned p_;
  unsigned q_;
};

/// Syntax or mode violation in the expression front-end.
/// `offset` is the byte index into the input where the error was detected.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& detail)
      : Error("parse error at offset " + std::to_string(offset) + ": " + detail +
              (expected.empty() ? "" : " (expected " + expected + ")")),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace ordercalc
