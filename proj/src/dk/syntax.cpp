#include "lpm/dk/syntax.hpp"

namespace lpm::dk {

ExprPtr ident(std::string name, Span span) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::Ident, std::move(name), nullptr, nullptr, span});
}

ExprPtr type_sort(Span span) { return std::make_shared<const Expr>(Expr{Expr::Kind::Type, "", nullptr, nullptr, span}); }

ExprPtr app(ExprPtr fn, ExprPtr arg, Span span) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::App, "", std::move(fn), std::move(arg), span});
}

ExprPtr app(ExprPtr fn, const std::vector<ExprPtr>& args) {
  for (const ExprPtr& a : args) fn = app(std::move(fn), a);
  return fn;
}

ExprPtr lam(std::string binder, ExprPtr domain, ExprPtr body, Span span) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::Lam, std::move(binder), std::move(domain), std::move(body), span});
}

ExprPtr pi(std::string binder, ExprPtr domain, ExprPtr body, Span span) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::Pi, std::move(binder), std::move(domain), std::move(body), span});
}

ExprPtr arrow(ExprPtr domain, ExprPtr codomain, Span span) {
  return pi("", std::move(domain), std::move(codomain), span);
}

bool same(const Expr& a, const Expr& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.name != b.name) return false;
  switch (a.kind) {
    case Expr::Kind::Ident:
    case Expr::Kind::Type:
      return true;
    default:
      return same(*a.left, *b.left) && same(*a.right, *b.right);
  }
}

namespace {

struct SameItem {
  bool operator()(const Decl& a, const Decl& b) const { return a.name == b.name && same(a.type, b.type); }
  bool operator()(const Def& a, const Def& b) const {
    return a.name == b.name && same(a.type, b.type) && same(a.body, b.body);
  }
  bool operator()(const RuleEntry& a, const RuleEntry& b) const {
    if (a.ctx.size() != b.ctx.size()) return false;
    for (std::size_t i = 0; i < a.ctx.size(); ++i) {
      if (a.ctx[i].name != b.ctx[i].name || !same(a.ctx[i].type, b.ctx[i].type)) return false;
    }
    return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
  }
  bool operator()(const Assert& a, const Assert& b) const { return same(a.term, b.term) && same(a.type, b.type); }
  bool operator()(const Comment& a, const Comment& b) const { return a.text == b.text; }
  template <class A, class B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

}  // namespace

bool same(const Entry& a, const Entry& b) { return std::visit(SameItem{}, a.item, b.item); }

bool same(const std::vector<Entry>& a, const std::vector<Entry>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same(a[i], b[i])) return false;
  }
  return true;
}

static std::string describe(Position where, const std::vector<std::string>& expected, const std::string& found) {
  std::string msg = std::to_string(where.line) + ":" + std::to_string(where.column) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

SyntaxError::SyntaxError(Position where, std::vector<std::string> expected, std::string found)
    : std::runtime_error(describe(where, expected, found)),
      where_(where),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

bool is_keyword(std::string_view s) { return s == "Type" || s == "def"; }

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto start = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto rest = [&](char c) { return start(c) || (c >= '0' && c <= '9') || c == '\''; };
  if (!start(s[0])) return false;
  for (char c : s.substr(1)) {
    if (!rest(c)) return false;
  }
  return !is_keyword(s);
}

}  // namespace lpm::dk
