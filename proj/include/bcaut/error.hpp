#ifndef BCAUT_ERROR_HPP
#define BCAUT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcaut {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter, state or bit index outside its declared range.
class range_error : public error {
 public:
  using error::error;
};

/// Two objects whose interfaces (alphabet, widths, codes) do not line up.
class interface_mismatch : public error {
 public:
  using error::error;
};

/// A search or enumeration would exceed its configured budget.
class budget_exceeded : public error {
 public:
  budget_exceeded(const std::string& what, double required)
      : error(what), required_(required) {}
  double required() const noexcept { return required_; }

 private:
  double required_;
};

/// Malformed text input; carries the 1-based line number.
class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& msg)
      : error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bcaut

#endif
