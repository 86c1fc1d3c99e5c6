#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lpm::dk {

struct Position {
  int line = 0;
  int column = 0;
};

struct Span {
  Position begin;
  Position end;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Surface term. Names are kept as written; resolution happens in the loader.
struct Expr {
  enum class Kind { Ident, Type, App, Lam, Pi };

  Kind kind;
  // Ident: the identifier, possibly qualified. Lam/Pi: the binder name, empty
  // for a non-dependent arrow.
  std::string name;
  // App: function and argument. Lam/Pi: domain and body.
  ExprPtr left;
  ExprPtr right;
  Span span;
};

ExprPtr ident(std::string name, Span span = {});
ExprPtr type_sort(Span span = {});
ExprPtr app(ExprPtr fn, ExprPtr arg, Span span = {});
ExprPtr app(ExprPtr fn, const std::vector<ExprPtr>& args);
ExprPtr lam(std::string binder, ExprPtr domain, ExprPtr body, Span span = {});
ExprPtr pi(std::string binder, ExprPtr domain, ExprPtr body, Span span = {});
ExprPtr arrow(ExprPtr domain, ExprPtr codomain, Span span = {});

// Structural equality ignoring spans.
bool same(const Expr& a, const Expr& b);
inline bool same(const ExprPtr& a, const ExprPtr& b) { return same(*a, *b); }

struct Binding {
  std::string name;
  ExprPtr type;
};

struct Decl {
  std::string name;
  ExprPtr type;
};

struct Def {
  std::string name;
  ExprPtr type;
  ExprPtr body;
};

struct RuleEntry {
  std::vector<Binding> ctx;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Assert {
  ExprPtr term;
  ExprPtr type;
};

struct Comment {
  std::string text;
};

struct Entry {
  std::variant<Decl, Def, RuleEntry, Assert, Comment> item;
  Span span;
};

bool same(const Entry& a, const Entry& b);
bool same(const std::vector<Entry>& a, const std::vector<Entry>& b);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(Position where, std::vector<std::string> expected, std::string found);

  Position where() const { return where_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  Position where_;
  std::vector<std::string> expected_;
  std::string found_;
};

std::vector<Entry> parse_file(std::string_view text);
// Parses a single term, e.g. for tests and the command line.
ExprPtr parse_term(std::string_view text);

bool is_identifier(std::string_view s);
bool is_keyword(std::string_view s);

std::string print_expr(const Expr& e);
std::string print_entry(const Entry& e);
// Entries separated by newlines, with a trailing newline.
std::string print_file(const std::vector<Entry>& entries);

}  // namespace lpm::dk
