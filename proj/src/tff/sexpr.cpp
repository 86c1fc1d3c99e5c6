#include "lpm/tff/sexpr.hpp"

#include <cctype>

namespace lpm::tff {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Sexpr> all() {
    std::vector<Sexpr> out;
    for (skip(); pos_ < text_.size(); skip()) {
      if (text_[pos_] == ')') throw FormatError(line_, col_, "unbalanced ')'");
      out.push_back(one());
    }
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  Sexpr one() {
    Sexpr s;
    s.line = line_;
    s.column = col_;
    if (text_[pos_] == '(') {
      advance();
      for (skip(); pos_ < text_.size() && text_[pos_] != ')'; skip()) s.items.push_back(one());
      if (pos_ >= text_.size()) throw FormatError(s.line, s.column, "unclosed '('");
      advance();
      return s;
    }
    s.is_atom = true;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c))) break;
      s.atom += c;
      advance();
    }
    return s;
  }
};

}  // namespace

std::vector<Sexpr> parse_sexprs(std::string_view text) { return Reader(text).all(); }

std::string print_sexpr(const Sexpr& s) {
  if (s.is_atom) return s.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i > 0) out += ' ';
    out += print_sexpr(s.items[i]);
  }
  return out + ")";
}

}  // namespace lpm::tff
