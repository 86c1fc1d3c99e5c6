#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpm::tff {

// Minimal S-expressions: atoms are maximal runs of characters other than
// whitespace, parentheses and ';'. A ';' starts a comment to end of line.
struct Sexpr {
  bool is_atom = false;
  std::string atom;
  std::vector<Sexpr> items;
  int line = 0;
  int column = 0;

  bool is(std::string_view text) const { return is_atom && atom == text; }
  // A list whose first element is the atom `head`.
  bool headed(std::string_view head) const { return !is_atom && !items.empty() && items[0].is(head); }
  std::string where() const { return std::to_string(line) + ":" + std::to_string(column); }
};

class FormatError : public std::runtime_error {
 public:
  FormatError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  FormatError(const Sexpr& at, const std::string& message) : FormatError(at.line, at.column, message) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// All top-level expressions in `text`.
std::vector<Sexpr> parse_sexprs(std::string_view text);

// Compact single-line rendering.
std::string print_sexpr(const Sexpr& s);

}  // namespace lpm::tff
