#include "lpm/dk/syntax.hpp"

namespace lpm::dk {

namespace {

void term(const Expr& e, std::string& out);

void atom(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Ident:
      out += e.name;
      return;
    case Expr::Kind::Type:
      out += "Type";
      return;
    default:
      out += '(';
      term(e, out);
      out += ')';
  }
}

void application(const Expr& e, std::string& out) {
  if (e.kind == Expr::Kind::App) {
    application(*e.left, out);
    out += ' ';
    atom(*e.right, out);
  } else {
    atom(e, out);
  }
}

bool is_binder(const Expr& e) { return e.kind == Expr::Kind::Lam || e.kind == Expr::Kind::Pi; }

void app_level(const Expr& e, std::string& out) {
  if (is_binder(e)) {
    out += '(';
    term(e, out);
    out += ')';
  } else {
    application(e, out);
  }
}

void term(const Expr& e, std::string& out) {
  if (!is_binder(e)) {
    application(e, out);
    return;
  }
  if (e.kind == Expr::Kind::Pi && e.name.empty()) {
    app_level(*e.left, out);
    out += " -> ";
    term(*e.right, out);
    return;
  }
  out += e.name;
  out += " : ";
  app_level(*e.left, out);
  out += e.kind == Expr::Kind::Lam ? " => " : " -> ";
  term(*e.right, out);
}

// Like term, but a leading binder anywhere along the arrow spine is wrapped,
// because the #ASSERT subject is parsed without one.
void arrow_level(const Expr& e, std::string& out) {
  if (e.kind == Expr::Kind::Pi && e.name.empty()) {
    app_level(*e.left, out);
    out += " -> ";
    arrow_level(*e.right, out);
  } else {
    app_level(e, out);
  }
}

struct EntryPrinter {
  std::string& out;

  void operator()(const Decl& d) {
    out += d.name;
    out += " : ";
    term(*d.type, out);
    out += '.';
  }
  void operator()(const Def& d) {
    out += "def ";
    out += d.name;
    out += " : ";
    term(*d.type, out);
    out += " := ";
    term(*d.body, out);
    out += '.';
  }
  void operator()(const RuleEntry& r) {
    out += '[';
    for (std::size_t i = 0; i < r.ctx.size(); ++i) {
      if (i > 0) out += ", ";
      out += r.ctx[i].name;
      out += " : ";
      term(*r.ctx[i].type, out);
    }
    out += "] ";
    term(*r.lhs, out);
    out += " --> ";
    term(*r.rhs, out);
    out += '.';
  }
  void operator()(const Assert& a) {
    out += "#ASSERT ";
    arrow_level(*a.term, out);
    out += " : ";
    term(*a.type, out);
    out += '.';
  }
  void operator()(const Comment& c) {
    out += "(;";
    out += c.text;
    out += ";)";
  }
};

}  // namespace

std::string print_expr(const Expr& e) {
  std::string out;
  term(e, out);
  return out;
}

std::string print_entry(const Entry& e) {
  std::string out;
  std::visit(EntryPrinter{out}, e.item);
  return out;
}

std::string print_file(const std::vector<Entry>& entries) {
  std::string out;
  for (const Entry& e : entries) {
    out += print_entry(e);
    out += '\n';
  }
  return out;
}

}  // namespace lpm::dk
