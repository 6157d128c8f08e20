#ifndef BCAUT_TEXT_IO_HPP
#define BCAUT_TEXT_IO_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace bcaut::io {

/// Tokenized line-oriented reader shared by all text formats. '#' starts a
/// comment; blank lines are skipped.
class line_reader {
 public:
  explicit line_reader(std::istream& in) : in_(in) {}

  /// Next non-empty line split on whitespace, or nullopt at end of input.
  std::optional<std::vector<std::string>> next() {
    if (pending_) {
      auto t = std::move(*pending_);
      pending_.reset();
      return t;
    }
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      for (std::string tok; ss >> tok;) {
        tokens.push_back(tok);
      }
      if (!tokens.empty()) {
        return tokens;
      }
    }
    return std::nullopt;
  }

  /// Pushes a line back so the next call to next() returns it again.
  void unread(std::vector<std::string> tokens) { pending_ = std::move(tokens); }

  std::vector<std::string> expect(std::string_view what) {
    auto t = next();
    if (!t) {
      fail("unexpected end of input, expected " + std::string(what));
    }
    return *t;
  }

  std::size_t line() const noexcept { return line_no_; }

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(line_no_, msg); }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
  std::optional<std::vector<std::string>> pending_;
};

inline std::uint64_t parse_uint(const line_reader& r, std::string_view tok) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    r.fail("expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

inline std::int64_t parse_int(const line_reader& r, std::string_view tok) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    r.fail("expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

/// Parses a bit code of the given width; "-" is the empty code.
inline std::uint64_t parse_code(const line_reader& r, std::string_view tok,
                                std::size_t width) {
  if (width == 0) {
    if (tok != "-") r.fail("expected '-' for a zero-width code");
    return 0;
  }
  if (tok.size() != width) {
    r.fail("code '" + std::string(tok) + "' should have " + std::to_string(width) + " bits");
  }
  std::uint64_t v = 0;
  for (char ch : tok) {
    if (ch != '0' && ch != '1') r.fail("code must consist of 0/1 characters");
    v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return v;
}

inline void expect_arity(const line_reader& r, const std::vector<std::string>& t,
                         std::size_t n) {
  if (t.size() != n) {
    r.fail("'" + t.front() + "' line expects " + std::to_string(n - 1) + " fields");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw error("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw error("cannot write '" + path + "'");
  }
  out << content;
}

}  // namespace bcaut::io

#endif
