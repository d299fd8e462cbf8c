#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace ecm {

/// Base class for every error thrown by the library. The C API maps each
/// subclass onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured term cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, double estimate, std::uint64_t cap)
      : Error(what + ": " + format_estimate(estimate) + " terms exceeds cap " + std::to_string(cap)),
        estimate_(estimate),
        cap_(cap) {}

  double estimate() const noexcept { return estimate_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  static std::string format_estimate(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }

  double estimate_;
  std::uint64_t cap_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two independent routes that must agree did not.
class Mismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace ecm
